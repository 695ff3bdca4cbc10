"""Independent oracles for the test suite.

These deliberately avoid the package's counting kernel: occurrences are
counted by enumerating index subsets, and spectra by looping over every word
with that naive counter.
"""

from itertools import combinations

from binseq import BinaryWord


def naive_count(p: BinaryWord, w: BinaryWord) -> int:
    letters_p = tuple(p)
    letters_w = tuple(w)
    return sum(
        1
        for idx in combinations(range(len(letters_w)), len(letters_p))
        if all(letters_w[i] == letters_p[j] for j, i in enumerate(idx))
    )


def naive_spectrum(p: BinaryWord, n: int) -> list:
    counts: list = []
    for bits in range(1 << n):
        k = naive_count(p, BinaryWord(n, bits))
        if k >= len(counts):
            counts.extend([0] * (k + 1 - len(counts)))
        counts[k] += 1
    return counts


def all_patterns(l: int):
    return [BinaryWord(l, bits) for bits in range(1 << l)]
