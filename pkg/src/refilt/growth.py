"""Hilbert-function counting for the PBW basis under a weight filtration.

A basis monomial z^beta x^gamma sits in filtration level |beta|_1 +
<w, gamma>.  Counting is an exact convolution over the t Laurent coordinates
(each contributes its absolute value) and the s weighted coordinates (each
contributes a multiple of its weight).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .graded import gr_as_presentation, gr_structure


def _weights(w) -> tuple:
    entries = tuple(getattr(w, "w", w))
    if not all(isinstance(x, int) and x >= 1 for x in entries):
        raise ValueError("weights must be positive integers")
    return entries


@lru_cache(maxsize=256)
def _degree_counts(t: int, weights: tuple, n_max: int) -> tuple:
    """counts[d] = number of (beta, gamma) with |beta|_1 + <w, gamma> = d."""
    counts = [1] + [0] * n_max
    for _ in range(t):
        nxt = [0] * (n_max + 1)
        for d, c in enumerate(counts):
            if not c:
                continue
            nxt[d] += c  # z-coordinate 0
            for e in range(1, n_max - d + 1):
                nxt[d + e] += 2 * c  # +e and -e
        counts = nxt
    for wi in weights:
        nxt = [0] * (n_max + 1)
        for d, c in enumerate(counts):
            if not c:
                continue
            e = 0
            while d + e <= n_max:
                nxt[d + e] += c
                e += wi
        counts = nxt
    return tuple(counts)


def hilbert_count(pres, w, n: int) -> int:
    """Exact number of basis monomials in filtration level <= n."""
    weights = _weights(w)
    if len(weights) != pres.s:
        raise ValueError(f"weight vector rank {len(weights)} != s = {pres.s}")
    if n < 0:
        raise ValueError("level must be nonnegative")
    return sum(_degree_counts(pres.t, weights, n)[: n + 1])


@dataclass
class GrowthTable:
    counts: tuple
    w: tuple
    estimated_degree: Fraction
    exact_fit: Optional[tuple]  # polynomial coefficients, ascending, Fractions
    is_estimate: bool

    def fit_value(self, n: int) -> Fraction:
        if self.exact_fit is None:
            raise ValueError("no exact fit available")
        acc = Fraction(0)
        for c in reversed(self.exact_fit):
            acc = acc * n + c
        return acc


def _diff(seq):
    return [b - a for a, b in zip(seq, seq[1:])]


def _newton_fit(xs, ys) -> tuple:
    """Interpolating polynomial through (xs, ys), coefficients ascending."""
    k = len(xs)
    coeffs = [Fraction(y) for y in ys]
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form sum coeffs[j] * prod_{i<j} (x - xs[i])
    poly = [Fraction(0)] * k
    basis = [Fraction(1)]
    for j in range(k):
        for d, b in enumerate(basis):
            poly[d] += coeffs[j] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for d, b in enumerate(basis):
            nxt[d] -= b * xs[j]
            nxt[d + 1] += b
        basis = nxt
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def gk_estimate(pres, w, n_max: int) -> GrowthTable:
    """Growth table with the polynomial growth degree.

    The degree is the smallest d whose (d+1)-st finite differences vanish on
    the whole second half of the table (exact polynomial growth); when no
    order of differences stabilizes, fall back to the log2 ratio
    h(n_max)/h(n_max//2) with the estimate flag set.
    """
    if n_max < 8:
        raise ValueError("n_max must be >= 8")
    weights = _weights(w)
    per_degree = _degree_counts(pres.t, weights, n_max)
    counts = []
    acc = 0
    for d in range(n_max + 1):
        acc += per_degree[d]
        counts.append(acc)

    tail_start = n_max // 2
    for d in range(0, min(12, n_max - 2)):
        seq = counts
        for _ in range(d + 1):
            seq = _diff(seq)
        if len(seq) > tail_start and all(v == 0 for v in seq[tail_start:]):
            xs = list(range(tail_start, tail_start + d + 1))
            fit = _newton_fit(xs, [counts[x] for x in xs])
            table = GrowthTable(tuple(counts), weights, Fraction(len(fit) - 1), fit, False)
            if all(table.fit_value(n) == counts[n] for n in range(tail_start, n_max + 1)):
                return table
    ratio = counts[n_max] / counts[n_max // 2]
    est = Fraction(round(math.log2(ratio) * 1000), 1000)
    return GrowthTable(tuple(counts), weights, est, None, True)


def graded_dim_compare(pres, w, n_max: int, w_gr=None) -> bool:
    """Equality of level counts between a presentation and its graded data."""
    grp = gr_as_presentation(gr_structure(pres))
    wa = _weights(w)
    wb = _weights(w_gr) if w_gr is not None else wa
    return all(
        hilbert_count(pres, wa, n) == hilbert_count(grp, wb, n) for n in range(n_max + 1)
    )


def growth_csv(table: GrowthTable) -> str:
    lines = ["n,h"]
    lines.extend(f"{n},{h}" for n, h in enumerate(table.counts))
    return "\n".join(lines) + "\n"
