"""Exact frequency spectra: how many length-n words contain p exactly k times."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import BudgetExceeded, EmptyPattern, OutOfStatedRange
from .words import BinaryWord, binomial, count_occurrences, run_decompose

#: Hard guard on exhaustive enumeration; callers may lower it.
DEFAULT_ENUMERATION_CAP = 30

# Shards are fixed-size blocks of the word space keyed by high-order bits, so
# partial histograms merge by addition and output is worker-count independent.
_SHARD_BITS = 16

_INT64_MAX = int(np.iinfo(np.int64).max)


@dataclass(frozen=True)
class Spectrum:
    """The vector (B(0), ..., B(K_max)) for one pattern and word length."""

    pattern: BinaryWord
    n: int
    counts: tuple

    @property
    def k_max(self) -> int:
        return len(self.counts) - 1

    def to_json_dict(self) -> dict:
        # Integers as decimal strings so 64-bit JSON consumers never truncate.
        return {
            "pattern": str(self.pattern),
            "n": self.n,
            "counts": [str(c) for c in self.counts],
        }

    def to_csv_rows(self):
        yield ("k", "count")
        for k, c in enumerate(self.counts):
            yield (str(k), str(c))


def _check_enumerable(p: BinaryWord, n: int, cap: int) -> None:
    if p.length == 0:
        raise EmptyPattern()
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise BudgetExceeded(n, cap)


def _shard_scan(letters, n, base, size, collect_max):
    """Per-word occurrence counts over words [base, base+size) via the prefix
    recurrence, vectorized across the shard."""
    words = np.arange(base, base + size, dtype=np.int64)
    l = len(letters)
    c = np.zeros((l + 1, size), dtype=np.int64)
    c[0] = 1
    for pos in range(n):
        letter = (words >> (n - 1 - pos)) & 1
        for j in range(l, 0, -1):
            mask = letter if letters[j - 1] else 1 - letter
            c[j] += c[j - 1] * mask
    final = c[l]
    hist = np.bincount(final)
    if collect_max:
        m = int(final.max())
        return hist, m, (base + np.flatnonzero(final == m)).tolist()
    return hist, None, None


def _histogram(p: BinaryWord, n: int, workers: int, cap: int, collect_max: bool):
    """Exact histogram of c_p over all 2^n words, plus (optionally) the words
    attaining the maximum.  Returns (counts list, argmax word bits or None)."""
    _check_enumerable(p, n, cap)
    letters = tuple(p)
    # Intermediate prefix counts are bounded by C(n, floor(n/2)); stay on the
    # fast int64 path only while that provably fits.
    if comb(n, n // 2) > _INT64_MAX:
        return _histogram_python(letters, n, collect_max)

    shard_bits = min(n, _SHARD_BITS)
    size = 1 << shard_bits
    bases = range(0, 1 << n, size)
    jobs = ((letters, n, base, size, collect_max) for base in bases)
    if workers > 1 and len(bases) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda args: _shard_scan(*args), jobs))
    else:
        parts = [_shard_scan(*args) for args in jobs]

    counts: list = []
    for hist, _, _ in parts:
        if len(hist) > len(counts):
            counts.extend([0] * (len(hist) - len(counts)))
        for k, c in enumerate(hist.tolist()):
            counts[k] += c
    best = None
    if collect_max:
        m = max(part[1] for part in parts)
        best = [w for part in parts if part[1] == m for w in part[2]]
    return counts, best


def _histogram_python(letters, n, collect_max):
    # Big-int fallback; only reachable when the cap is raised past n = 62.
    l = len(letters)
    counts: list = []
    best_words: list = []
    best = -1
    for bits in range(1 << n):
        c = [0] * (l + 1)
        c[0] = 1
        for pos in range(n):
            letter = (bits >> (n - 1 - pos)) & 1
            for j in range(l, 0, -1):
                if letters[j - 1] == letter:
                    c[j] += c[j - 1]
        k = c[l]
        if k >= len(counts):
            counts.extend([0] * (k + 1 - len(counts)))
        counts[k] += 1
        if collect_max:
            if k > best:
                best, best_words = k, [bits]
            elif k == best:
                best_words.append(bits)
    return counts, (best_words if collect_max else None)


def brute_spectrum(
    p: BinaryWord,
    n: int,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Spectrum:
    """Enumerate all 2^n words and histogram their occurrence counts of p.

    This is the reference oracle for every B value in the package.  Output is
    identical for any worker count.
    """
    counts, _ = _histogram(p, n, workers, cap, collect_max=False)
    return Spectrum(p, n, tuple(counts))


def brute_spectrum_with_argmax(
    p: BinaryWord,
    n: int,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
):
    """Like brute_spectrum, but also returns the bits of every word attaining
    the maximum count (ascending)."""
    counts, best = _histogram(p, n, workers, cap, collect_max=True)
    return Spectrum(p, n, tuple(counts)), best


def closed_form_B(p: BinaryWord, n: int, k: int) -> int:
    """Closed-form value of B(k) for k <= 4.

    Refuses (OutOfStatedRange) outside the ranges the formulas are asserted
    for: any n >= 0 for k <= 2, n >= 3 for k = 3, n >= 5 for k = 4.
    """
    if not 0 <= k <= 4:
        raise ValueError(f"closed forms exist only for 0 <= k <= 4, got {k}")
    if n < 0 or (k == 3 and n < 3) or (k == 4 and n < 5):
        raise OutOfStatedRange(n, k)

    prof = run_decompose(p)
    l, r = p.length, prof.r
    r1 = prof.run_size_counts.get(1, 0)
    r2 = prof.run_size_counts.get(2, 0)
    r3 = prof.run_size_counts.get(3, 0)

    if k == 0:
        return sum(binomial(n, j) for j in range(l))
    if k == 1:
        return binomial(n - r + 1, l - r + 1)
    if k == 2:
        if l == 1:
            return binomial(n, 2)
        return r1 * binomial(n - r, l - r + 1)
    if k == 3:
        if l >= 3:
            return (
                r1 * binomial(n - r - 1, l - r + 1)
                + (r2 - prof.r2b) * binomial(n - r - 1, l - r)
                + prof.r2b * binomial(n - r, l - r + 1)
            )
        if r == 1:
            return binomial(n, 3)
        return 3 * (n - 3)
    # k == 4
    if l >= 4:
        return (
            r1 * binomial(n - r - 2, l - r + 1)
            + binomial(r1, 2) * binomial(n - r - 1, l - r + 1)
            + (r3 - prof.r3b) * binomial(n - r - 1, l - r)
            + prof.r3b * binomial(n - r, l - r + 1)
            + prof.r12b * binomial(n - r - 2, l - r)
        )
    small = {
        (2, 1): 0,
        (1, 1): binomial(n, 4),
        (3, 1): binomial(n, 4),
        (3, 2): (n - 4) ** 2,
        (2, 2): 5 * n - 19,
        (3, 3): 7 * n - 31,
    }
    return small[(l, r)]


def length_plus_one_spectrum(p: BinaryWord, k: int) -> int:
    """B(k) at word length l+1: the number of runs of size k-1 in p."""
    if k < 2:
        raise ValueError(f"only asserted for k >= 2, got {k}")
    return run_decompose(p).run_size_counts.get(k - 1, 0)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    lhs: int
    rhs: int


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple
    average: Fraction

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "checks": [
                {"name": c.name, "holds": c.holds, "lhs": str(c.lhs), "rhs": str(c.rhs)}
                for c in self.checks
            ],
            "average": f"{self.average.numerator}/{self.average.denominator}",
            "all_hold": self.all_hold,
        }


def verify_identities(s: Spectrum) -> IdentityReport:
    """Check sum B = 2^n and sum k*B = 2^(n-l) C(n, l) against a spectrum.

    Violations are reported, not raised.  Also reports the exact average
    occurrence count C(n, l) / 2^l.
    """
    n, l = s.n, s.pattern.length
    total = sum(s.counts)
    weighted = sum(k * c for k, c in enumerate(s.counts))
    expected_weighted = (1 << (n - l)) * comb(n, l) if n >= l else 0
    checks = (
        IdentityCheck("sum", total == 1 << n, total, 1 << n),
        IdentityCheck("weighted_sum", weighted == expected_weighted, weighted, expected_weighted),
    )
    return IdentityReport(checks, Fraction(comb(n, l), 1 << l))
