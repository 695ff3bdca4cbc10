"""Strong-Wilf-equivalence scanning over all patterns of a given length.

Patterns are partitioned by their spectra fingerprints up to a finite horizon
n_max and the partition is compared against the trivial-equivalence classes
(reverse / complement / both).  An equal-fingerprint pair outside one trivial
class is only a counterexample *candidate*: the fingerprint is finite, strong
Wilf equivalence quantifies over all n.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .spectrum import DEFAULT_ENUMERATION_CAP, brute_spectrum
from .words import BinaryWord, run_decompose, transform


@dataclass(frozen=True)
class TrivialClass:
    canonical: BinaryWord
    members: tuple


def trivial_class(p: BinaryWord) -> TrivialClass:
    """The 1-4 words related to p by reverse/complement; canonical member is
    the lexicographically least."""
    members = {p, transform(p, "reverse"), transform(p, "complement"),
               transform(p, "reverse_complement")}
    ordered = tuple(sorted(members))
    return TrivialClass(ordered[0], ordered)


def run_size_multiset(p: BinaryWord) -> tuple:
    """Sorted run sizes; equal for strongly Wilf-equivalent patterns."""
    return tuple(sorted(run_decompose(p).sizes))


def fingerprint(
    p: BinaryWord,
    n_max: int,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
    cache: Optional[dict] = None,
) -> tuple:
    """Spectra of p for n = l .. n_max, as a tuple of count tuples.

    Two patterns get equal fingerprints iff their spectra agree at every
    n <= n_max (spectra below l are the same for all patterns of length l).
    """
    if n_max < p.length:
        raise ValueError(f"n_max must be at least the pattern length {p.length}")
    out = []
    for n in range(p.length, n_max + 1):
        key = (str(p), n)
        if cache is not None and key in cache:
            out.append(cache[key])
            continue
        counts = brute_spectrum(p, n, workers=workers, cap=cap).counts
        if cache is not None:
            cache[key] = counts
        out.append(counts)
    return tuple(out)


@dataclass(frozen=True)
class WilfClass:
    members: tuple  # BinaryWords, sorted
    trivial_class_count: int
    least_separating_n: Optional[int]
    fingerprint: tuple

    def to_json_dict(self) -> dict:
        return {
            "members": [str(w) for w in self.members],
            "trivial_class_count": self.trivial_class_count,
            "least_separating_n": self.least_separating_n,
        }


@dataclass(frozen=True)
class EquivalenceClassing:
    l: int
    n_max: int
    classes: tuple
    verdict: bool

    @property
    def max_least_separating_n(self) -> Optional[int]:
        seps = [c.least_separating_n for c in self.classes if c.least_separating_n is not None]
        return max(seps) if seps else None

    def to_json_dict(self) -> dict:
        return {
            "l": self.l,
            "n_max": self.n_max,
            "classes": [c.to_json_dict() for c in self.classes],
            "verdict": self.verdict,
            "max_least_separating_n": self.max_least_separating_n,
            "note": "verdict is relative to the finite horizon n_max",
        }


def _load_checkpoint(path: str) -> dict:
    cache: dict = {}
    if not os.path.exists(path):
        return cache
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            cache[(rec["pattern"], rec["n"])] = tuple(int(c) for c in rec["counts"])
    return cache


def _append_checkpoint(path: str, fresh: list) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for (pattern, n), counts in fresh:
            fh.write(json.dumps({"pattern": pattern, "n": n,
                                 "counts": [str(c) for c in counts]}) + "\n")


def _separating_n(fp_a: tuple, fp_b: tuple, start_n: int) -> Optional[int]:
    for offset, (sa, sb) in enumerate(zip(fp_a, fp_b)):
        if sa != sb:
            return start_n + offset
    return None


def strong_wilf_scan(
    l: int,
    n_max: int,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
    checkpoint_path: Optional[str] = None,
) -> EquivalenceClassing:
    """Partition all 2^l patterns by spectra fingerprints up to n_max.

    Fingerprints are computed once per trivial-class canonical representative
    (trivially equivalent patterns provably share spectra) and compared only
    within equal run-size-multiset groups; patterns in different groups are
    already separated at n = l+1.  verdict is True iff every fingerprint
    class is exactly one trivial class within the horizon.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    if n_max < l:
        raise ValueError("n_max must be >= l")

    classes: dict = {}
    for bits in range(1 << l):
        tc = trivial_class(BinaryWord(l, bits))
        classes.setdefault(tc.canonical, tc)
    reps = sorted(classes)

    cache = _load_checkpoint(checkpoint_path) if checkpoint_path else {}
    known = set(cache)

    def fp_of(rep):
        return fingerprint(rep, n_max, workers=1, cap=cap, cache=cache)

    if workers > 1:
        # Thread-per-representative; each thread only adds to the shared
        # cache, and results are collected in deterministic rep order.
        with ThreadPoolExecutor(max_workers=workers) as pool:
            fps = dict(zip(reps, pool.map(fp_of, reps)))
    else:
        fps = {rep: fp_of(rep) for rep in reps}

    if checkpoint_path:
        fresh = sorted((key, counts) for key, counts in cache.items() if key not in known)
        if fresh:
            _append_checkpoint(checkpoint_path, fresh)

    by_key: dict = {}
    for rep in reps:
        by_key.setdefault(run_size_multiset(rep), []).append(rep)

    grouped: dict = {}
    for rep in reps:
        grouped.setdefault(fps[rep], []).append(rep)

    out = []
    for fp, members_reps in sorted(grouped.items(), key=lambda kv: kv[1][0]):
        members = tuple(sorted(w for rep in members_reps for w in classes[rep].members))
        key = run_size_multiset(members_reps[0])
        seps = []
        unresolved = False
        for other in by_key[key]:
            if fps[other] == fp:
                continue
            sep = _separating_n(fp, fps[other], l)
            if sep is None:
                unresolved = True
            else:
                seps.append(sep)
        least_sep = None if (unresolved or not seps) else max(seps)
        out.append(WilfClass(members, len(members_reps), least_sep, fp))

    verdict = all(c.trivial_class_count == 1 for c in out)
    return EquivalenceClassing(l, n_max, tuple(out), verdict)
