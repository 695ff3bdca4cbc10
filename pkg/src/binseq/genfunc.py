"""Truncated expansion of the bivariate series counting words by length (x)
and by occurrences (t) of patterns of the form 1^i 0 1^j.

Decompose a word by its ones: a word with k ones is a choice, for each
l = 0..k, of how many zeros sit after the l-th one (and before the next).
Each such zero contributes C(l, i) * C(k-l, j) occurrences, so the summand
for k ones is

    (1 / (1 - x t^e(0,k))) * prod_{l=1}^{k} x / (1 - x t^e(l,k)),

with e(l, k) = C(l, i) * C(k-l, j).  When i >= 1 the l = 0 factor is just
1/(1-x) and can be pulled out of the sum; keeping it per-summand makes the
expansion exact for i = 0 as well.  Every summand carries one factor of x
per l >= 1, so terms with k > N cannot contribute below x-degree N+1 and the
outer sum truncates at k = N.  The identity is treated as a claim under
test: coefficients are meant to be compared against exhaustive spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class BivariateSeries:
    """Coefficients of x^n t^k for n <= order; one sparse {k: coeff} map per
    x-degree, with no stored zeros."""

    i: int
    j: int
    order: int
    coeffs: tuple

    def coefficient(self, n: int, k: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"x-degree {n} outside truncation order {self.order}")
        return self.coeffs[n].get(k, 0)

    def to_json_dict(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "N": self.order,
            "coeffs": [
                {"n": n, "terms": [{"k": k, "c": str(c)} for k, c in sorted(terms.items())]}
                for n, terms in enumerate(self.coeffs)
            ],
        }


def _times_geometric(poly, e, order, shift):
    """Multiply a truncated series (list of {t_exp: coeff} per x-degree) by
    x^shift / (1 - x t^e) = sum_{m>=0} x^(m+shift) t^(e m), shift in {0, 1}."""
    out = [dict() for _ in range(order + 1)]
    for d, terms in enumerate(poly):
        if not terms:
            continue
        for m in range(order + 1 - d - shift):
            target = out[d + shift + m]
            te = e * m
            for t_exp, c in terms.items():
                key = t_exp + te
                target[key] = target.get(key, 0) + c
    return out


def gf_coefficients(i: int, j: int, order: int) -> BivariateSeries:
    """Exact coefficients of x^n t^k for all n <= order."""
    if i < 0 or j < 0:
        raise ValueError("need i, j >= 0")
    if order < 0:
        raise ValueError("truncation order must be non-negative")

    total = [dict() for _ in range(order + 1)]
    for k in range(order + 1):
        poly = [dict() for _ in range(order + 1)]
        poly[0][0] = 1
        poly = _times_geometric(poly, comb(0, i) * comb(k, j), order, shift=0)
        for l in range(1, k + 1):
            e = comb(l, i) * comb(k - l, j)
            poly = _times_geometric(poly, e, order, shift=1)
        for d, terms in enumerate(poly):
            acc = total[d]
            for t_exp, c in terms.items():
                acc[t_exp] = acc.get(t_exp, 0) + c

    coeffs = tuple(
        {k: c for k, c in terms.items() if c != 0} for terms in total
    )
    return BivariateSeries(i, j, order, coeffs)
