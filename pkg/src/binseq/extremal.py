"""Maximum occurrence counts, optimal words, internal zeros, and the
log-concavity machinery for product sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import NotCovered, PatternTooLong, PreconditionViolated
from .spectrum import DEFAULT_ENUMERATION_CAP, brute_spectrum, brute_spectrum_with_argmax
from .words import BinaryWord, binomial, run_decompose


# ---------------------------------------------------------------------------
# Sequence predicates


@dataclass(frozen=True)
class SequenceReport:
    values: tuple
    is_unimodal: bool
    is_log_concave: bool
    internal_zero_positions: tuple

    @property
    def has_internal_zeros(self) -> bool:
        return bool(self.internal_zero_positions)

    def to_json_dict(self) -> dict:
        return {
            "values": [str(v) for v in self.values],
            "is_unimodal": self.is_unimodal,
            "is_log_concave": self.is_log_concave,
            "internal_zero_positions": list(self.internal_zero_positions),
        }


def sequence_predicates(values: Sequence[int]) -> SequenceReport:
    """Evaluate internal zeros, unimodality, and log-concavity exactly."""
    v = tuple(values)
    m = len(v)

    nonzero = [i for i, x in enumerate(v) if x != 0]
    if nonzero:
        lo, hi = nonzero[0], nonzero[-1]
        zeros = tuple(i for i in range(lo + 1, hi) if v[i] == 0)
    else:
        zeros = ()

    i = 0
    while i + 1 < m and v[i] <= v[i + 1]:
        i += 1
    while i + 1 < m and v[i] >= v[i + 1]:
        i += 1
    unimodal = i == m - 1 or m == 0

    log_concave = all(v[i] * v[i] >= v[i - 1] * v[i + 1] for i in range(1, m - 1))

    return SequenceReport(v, unimodal, log_concave, zeros)


# ---------------------------------------------------------------------------
# Maximum occurrences


def max_three_run(i: int, j: int, k: int, n: int):
    """Maximum of C(a,i)C(b,j)C(c,k) over a+b+c = n, with every argmax.

    This is the maximum occurrence count of 1^i 0^j 1^k over length-n words.
    Scans all O(n^2) compositions exactly.
    """
    if i < 0 or k < 0 or j < 1:
        raise ValueError("need i, k >= 0 and j >= 1")
    if n < i + j + k:
        raise PatternTooLong(n, i + j + k)
    best = -1
    argmax = []
    for a in range(n + 1):
        ca = binomial(a, i)
        for b in range(n - a + 1):
            c = n - a - b
            v = ca * binomial(b, j) * binomial(c, k)
            if v > best:
                best, argmax = v, [(a, b, c)]
            elif v == best:
                argmax.append((a, b, c))
    return best, tuple(argmax)


@dataclass(frozen=True)
class ExtremalResult:
    pattern: BinaryWord
    n: int
    M: int
    optimal_words: tuple
    truncated: bool
    B_at_M_minus_1: Optional[int]

    def to_json_dict(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "n": self.n,
            "M": str(self.M),
            "optimal_words": [str(w) for w in self.optimal_words],
            "truncated": self.truncated,
            "B_at_M_minus_1": None if self.B_at_M_minus_1 is None else str(self.B_at_M_minus_1),
        }


def optimal_words(
    p: BinaryWord,
    n: int,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
    max_words: Optional[int] = None,
) -> ExtremalResult:
    """All length-n words with the maximum occurrence count of p, from the
    exhaustive spectrum.  max_words caps the returned set (truncated flag)."""
    spec, best_bits = brute_spectrum_with_argmax(p, n, workers=workers, cap=cap)
    M = spec.k_max
    truncated = False
    if max_words is not None and len(best_bits) > max_words:
        best_bits = best_bits[:max_words]
        truncated = True
    words = tuple(BinaryWord(n, bits) for bits in best_bits)
    b_prev = spec.counts[M - 1] if M >= 1 else None
    return ExtremalResult(p, n, M, words, truncated, b_prev)


def alternating_word(l: int) -> BinaryWord:
    """The length-l word 1010... with all runs of size 1."""
    return BinaryWord.from_letters((i + 1) % 2 for i in range(l))


def alternating_optimal_check(
    l: int, workers: int = 1, cap: int = DEFAULT_ENUMERATION_CAP
) -> bool:
    """True iff the only optimal word of length l+2 for the alternating
    length-l pattern is the alternating word of length l+2."""
    if l < 4:
        raise ValueError(f"only meaningful for l >= 4, got {l}")
    res = optimal_words(alternating_word(l), l + 2, workers=workers, cap=cap)
    return res.optimal_words == (alternating_word(l + 2),)


# ---------------------------------------------------------------------------
# Internal zeros


def internal_zero_report(
    p: BinaryWord, n: int, workers: int = 1, cap: int = DEFAULT_ENUMERATION_CAP
) -> SequenceReport:
    """Sequence predicates evaluated on the exact spectrum of p at length n."""
    return sequence_predicates(brute_spectrum(p, n, workers=workers, cap=cap).counts)


def _is_1101_class(p: BinaryWord) -> bool:
    targets = {"1101", "1011", "0010", "0100"}
    return str(p) in targets


def _covers_all_run_sizes(profile) -> bool:
    return all(s in profile.run_size_counts for s in range(1, profile.max_run_size + 1))


def _predict_internal_zero(p: BinaryWord, profile, n: int) -> bool:
    """Internal-zero prediction for patterns with at most 3 runs.

    Pieced together from the characterizations: alternating patterns have no
    internal zeros (except the 3-run alternating pattern at n = 6); 1-run
    patterns of length >= 2 have one at every n >= l+1; other patterns have
    one at every n >= l+2 (except the 1101 class at n = 6), and at n = l+1
    exactly when some run size in [1, max size] is missing.
    """
    l = p.length
    if n <= l:
        return False
    if profile.is_alternating:
        return l == 3 and n == 6
    if profile.r == 1:
        return True
    if n == l + 1:
        return not _covers_all_run_sizes(profile)
    if _is_1101_class(p) and n == 6:
        return False
    return True


def _predict_top_gap(p: BinaryWord, profile, n: int) -> Optional[bool]:
    """Predicted value of B(M-1) == 0 where asserted; None where not."""
    l = p.length
    if profile.is_alternating:
        # For alternating patterns the spectrum reaches its top without a
        # gap (the lone zero for l == 3, n == 6 sits strictly inside).
        return None if n <= l else False
    if n >= l + 2:
        return not (_is_1101_class(p) and n == 6)
    return None


@dataclass(frozen=True)
class InternalZeroRow:
    n: int
    internal_zero: bool
    top_gap: Optional[bool]
    predicted_internal_zero: Optional[bool]
    predicted_top_gap: Optional[bool]

    @property
    def agrees(self) -> bool:
        if self.predicted_internal_zero is not None and self.predicted_internal_zero != self.internal_zero:
            return False
        if self.predicted_top_gap is not None and self.predicted_top_gap != self.top_gap:
            return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "internal_zero": self.internal_zero,
            "top_gap": self.top_gap,
            "predicted_internal_zero": self.predicted_internal_zero,
            "predicted_top_gap": self.predicted_top_gap,
            "agrees": self.agrees,
        }


def classify_internal_zeros(
    p: BinaryWord,
    ns: Iterable[int],
    predict: bool = True,
    workers: int = 1,
    cap: int = DEFAULT_ENUMERATION_CAP,
):
    """Per-n internal-zero observations, with predictions when the
    pattern has at most 3 runs (predict=True requires that)."""
    profile = run_decompose(p)
    if predict and profile.r > 3:
        raise NotCovered(str(p))
    rows = []
    for n in ns:
        spec = brute_spectrum(p, n, workers=workers, cap=cap)
        report = sequence_predicates(spec.counts)
        M = spec.k_max
        top_gap = (spec.counts[M - 1] == 0) if M >= 1 else None
        rows.append(
            InternalZeroRow(
                n,
                report.has_internal_zeros,
                top_gap,
                _predict_internal_zero(p, profile, n) if predict else None,
                _predict_top_gap(p, profile, n) if predict else None,
            )
        )
    return tuple(rows)


# ---------------------------------------------------------------------------
# Product sequences


def _validate_sequence(name: str, seq: Sequence[int]) -> None:
    if any(x < 0 for x in seq):
        raise PreconditionViolated(name, "negative entry")
    rep = sequence_predicates(seq)
    if rep.has_internal_zeros:
        raise PreconditionViolated(name, "internal zero")
    if not rep.is_log_concave:
        raise PreconditionViolated(name, "not log-concave")


@dataclass(frozen=True)
class ProductSequenceResult:
    rows: tuple
    maxima: tuple
    rows_log_concave_zero_free: bool
    plateau_is_max: bool
    argmax_growth: bool
    maxima_log_concave_zero_free: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.rows_log_concave_zero_free
            and self.plateau_is_max
            and self.argmax_growth
            and self.maxima_log_concave_zero_free
        )

    def to_json_dict(self) -> dict:
        return {
            "maxima": [str(m) for m in self.maxima],
            "rows_log_concave_zero_free": self.rows_log_concave_zero_free,
            "plateau_is_max": self.plateau_is_max,
            "argmax_growth": self.argmax_growth,
            "maxima_log_concave_zero_free": self.maxima_log_concave_zero_free,
            "all_hold": self.all_hold,
        }


def product_sequence_analysis(
    a: Sequence[int], b: Sequence[int], n_max: int
) -> ProductSequenceResult:
    """Rows c_n(i) = a_i * b_{n-i} for n <= n_max and the four claims about
    them: each row log-concave and zero-free inside its support, nonzero
    plateaus sit at the row maximum, maxima propagate to adjacent positions,
    and the row maxima form a log-concave zero-free sequence.

    Inputs must be non-negative, log-concave, and free of internal zeros;
    indices past the end of a or b read as 0.
    """
    _validate_sequence("a", a)
    _validate_sequence("b", b)
    if n_max < 0:
        raise ValueError("n_max must be non-negative")

    def at(seq, i):
        return seq[i] if i < len(seq) else 0

    rows = tuple(
        tuple(at(a, i) * at(b, n - i) for i in range(n + 1)) for n in range(n_max + 1)
    )
    maxima = tuple(max(row) for row in rows)

    rows_ok = True
    plateau_ok = True
    for row, m in zip(rows, maxima):
        rep = sequence_predicates(row)
        if not rep.is_log_concave or rep.has_internal_zeros:
            rows_ok = False
        for i in range(len(row) - 1):
            # Zero plateaus at the support boundary are vacuous; the claim is
            # about plateaus of attained values.
            if row[i] == row[i + 1] != 0 and row[i] != m:
                plateau_ok = False

    growth_ok = True
    for n in range(n_max):
        row, nxt = rows[n], rows[n + 1]
        for i, v in enumerate(row):
            if v == maxima[n] and maxima[n + 1] != max(nxt[i], nxt[i + 1]):
                growth_ok = False

    max_rep = sequence_predicates(maxima)
    maxima_ok = max_rep.is_log_concave and not max_rep.has_internal_zeros
    return ProductSequenceResult(rows, maxima, rows_ok, plateau_ok, growth_ok, maxima_ok)


# ---------------------------------------------------------------------------
# The sequence (M_n) for three-run patterns


@dataclass(frozen=True)
class MaxSequenceResult:
    start_n: int
    report: SequenceReport
    argmax_growth: bool

    @property
    def values(self) -> tuple:
        return self.report.values

    def to_json_dict(self) -> dict:
        d = self.report.to_json_dict()
        d["start_n"] = self.start_n
        d["argmax_growth"] = self.argmax_growth
        return d


def max_sequence(i: int, j: int, k: int, n_max: int) -> MaxSequenceResult:
    """The sequence of maximum occurrence counts of 1^i 0^j 1^k for n from
    i+j+k to n_max, with its predicates and the argmax-growth check: every
    maximizing composition at n reaches one at n+1 by a single increment."""
    l = i + j + k
    if n_max < l:
        raise PatternTooLong(n_max, l)
    values = []
    argmaxes = []
    for n in range(l, n_max + 1):
        m, args = max_three_run(i, j, k, n)
        values.append(m)
        argmaxes.append(set(args))
    growth = True
    for prev, nxt in zip(argmaxes, argmaxes[1:]):
        for a, b, c in prev:
            if not ({(a + 1, b, c), (a, b + 1, c), (a, b, c + 1)} & nxt):
                growth = False
    return MaxSequenceResult(l, sequence_predicates(values), growth)
