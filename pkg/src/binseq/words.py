"""Binary words, run decompositions, and the occurrence-counting kernel."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from math import comb
from typing import Iterator

from .errors import EmptyPattern, InvalidCharacter

TRANSFORMS = ("reverse", "complement", "reverse_complement")


@dataclass(frozen=True, order=True)
class BinaryWord:
    """A fixed-length word over {0, 1}, bit-packed.

    The leftmost letter is the most significant bit, so "100" is stored as
    (length=3, bits=0b100).  Ordering is by length, then lexicographically
    ('0' < '1'), which matches string order for equal lengths.
    """

    length: int
    bits: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(f"bits 0b{self.bits:b} out of range for length {self.length}")

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> (self.length - 1 - i)) & 1

    def __iter__(self) -> Iterator[int]:
        for i in range(self.length):
            yield (self.bits >> (self.length - 1 - i)) & 1

    def __str__(self) -> str:
        if self.length == 0:
            return ""
        return format(self.bits, f"0{self.length}b")

    def __repr__(self) -> str:
        return f"BinaryWord({str(self)!r})"

    @classmethod
    def from_letters(cls, letters) -> "BinaryWord":
        bits = 0
        n = 0
        for b in letters:
            bits = (bits << 1) | (b & 1)
            n += 1
        return cls(n, bits)


def parse_word(text: str) -> BinaryWord:
    """Parse a string of '0'/'1' characters; inverse of str(word)."""
    bits = 0
    for pos, ch in enumerate(text):
        if ch == "1":
            bits = (bits << 1) | 1
        elif ch == "0":
            bits = bits << 1
        else:
            raise InvalidCharacter(pos, ch)
    return BinaryWord(len(text), bits)


def reverse(w: BinaryWord) -> BinaryWord:
    bits = 0
    v = w.bits
    for _ in range(w.length):
        bits = (bits << 1) | (v & 1)
        v >>= 1
    return BinaryWord(w.length, bits)


def complement(w: BinaryWord) -> BinaryWord:
    mask = (1 << w.length) - 1
    return BinaryWord(w.length, w.bits ^ mask)


def transform(w: BinaryWord, kind: str) -> BinaryWord:
    """Apply one of the three involutions: reverse, complement, or both."""
    if kind == "reverse":
        return reverse(w)
    if kind == "complement":
        return complement(w)
    if kind == "reverse_complement":
        return complement(reverse(w))
    raise ValueError(f"unknown transform {kind!r}; expected one of {TRANSFORMS}")


@dataclass(frozen=True)
class RunProfile:
    """Run decomposition of a pattern plus the counts the closed forms use.

    runs              ordered (symbol, size) pairs, sizes >= 1
    r                 total number of runs
    run_size_counts   size -> number of runs of that size
    r2b, r3b          runs of size 2 / 3 that are the first or last run
    r12b              2 if both the pattern and its reverse start with runs
                      of sizes (1, 2), 1 if exactly one of them does, else 0
    """

    runs: tuple
    r: int
    run_size_counts: dict
    r2b: int
    r3b: int
    r12b: int

    @property
    def sizes(self) -> tuple:
        return tuple(size for _, size in self.runs)

    @property
    def max_run_size(self) -> int:
        return max(self.sizes)

    @property
    def is_alternating(self) -> bool:
        return all(size == 1 for size in self.sizes)


def _starts_one_two(sizes) -> bool:
    return len(sizes) >= 2 and sizes[0] == 1 and sizes[1] == 2


def run_decompose(p: BinaryWord) -> RunProfile:
    """Decompose a non-empty pattern into maximal runs of equal letters."""
    if p.length == 0:
        raise EmptyPattern()
    runs = tuple((sym, len(list(grp))) for sym, grp in groupby(p))
    sizes = [size for _, size in runs]
    counts: dict = {}
    for size in sizes:
        counts[size] = counts.get(size, 0) + 1

    boundary = {0, len(runs) - 1}  # a single run is first and last, counted once
    r2b = sum(1 for i in boundary if sizes[i] == 2)
    r3b = sum(1 for i in boundary if sizes[i] == 3)
    r12b = int(_starts_one_two(sizes)) + int(_starts_one_two(sizes[::-1]))
    return RunProfile(runs, len(runs), counts, r2b, r3b, r12b)


def word_from_runs(runs) -> BinaryWord:
    """Rebuild a word from (symbol, size) pairs."""
    letters = []
    for sym, size in runs:
        letters.extend([sym] * size)
    return BinaryWord.from_letters(letters)


def count_occurrences(p: BinaryWord, w: BinaryWord) -> int:
    """Number of index tuples i_1 < ... < i_l with w restricted to them equal p.

    Prefix-count recurrence: c[j] holds the number of occurrences of the
    length-j prefix of p seen so far; each letter of w updates c in
    descending j.  Exact integers throughout, O(|w| * |p|).
    """
    if p.length == 0:
        raise EmptyPattern()
    letters = tuple(p)
    l = len(letters)
    c = [0] * (l + 1)
    c[0] = 1
    for letter in w:
        for j in range(l, 0, -1):
            if letters[j - 1] == letter:
                c[j] += c[j - 1]
    return c[l]


def binomial(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 for b < 0, b > a, or a < 0."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)
