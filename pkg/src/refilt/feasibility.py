"""Exact rational linear feasibility by Fourier-Motzkin elimination.

Constraints are rows (coeffs, bound) meaning sum_i coeffs[i] * x_i <= bound,
everything a Fraction.  Elimination tracks which original constraints each
derived row came from, so an infeasibility can name its witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass
class Infeasible(Exception):
    """No rational solution; conflict holds the original row indices."""

    conflict: frozenset

    def __str__(self):
        return f"infeasible; conflicting constraints {sorted(self.conflict)}"


def _combine(pos, neg):
    """Eliminate the pivot variable v from a positive and a negative row."""
    (cp, bp, op), (cn, bn, on), v = pos[0], neg[0], pos[1]
    a, b = cp[v], -cn[v]
    coeffs = tuple(b * x + a * y for x, y in zip(cp, cn))
    return coeffs, b * bp + a * bn, op | on


def feasible_point(rows, nvars: int) -> tuple:
    """A rational point satisfying all rows, or raise Infeasible.

    rows: iterable of (coeffs sequence, bound); coerced to Fractions.
    """
    system = [
        (tuple(Fraction(c) for c in coeffs), Fraction(bound), frozenset([k]))
        for k, (coeffs, bound) in enumerate(rows)
    ]
    stages = []  # (var, pos rows, neg rows) in elimination order (last var first)
    for v in range(nvars - 1, -1, -1):
        pos = [r for r in system if r[0][v] > 0]
        neg = [r for r in system if r[0][v] < 0]
        rest = [r for r in system if r[0][v] == 0]
        stages.append((v, pos, neg))
        for p in pos:
            for n in neg:
                rest.append(_combine((p, v), (n, v)))
        system = rest
    for coeffs, bound, origin in system:
        if bound < 0:
            raise Infeasible(origin)

    values: list = [None] * nvars
    for v, pos, neg in reversed(stages):
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for coeffs, bound, _ in pos:  # coeffs[v] > 0: upper bound on x_v
            rest = bound - sum(
                c * values[u] for u, c in enumerate(coeffs) if u != v and c
            )
            cand = rest / coeffs[v]
            hi = cand if hi is None or cand < hi else hi
        for coeffs, bound, _ in neg:  # coeffs[v] < 0: lower bound
            rest = bound - sum(
                c * values[u] for u, c in enumerate(coeffs) if u != v and c
            )
            cand = rest / coeffs[v]
            lo = cand if lo is None or cand > lo else lo
        if lo is not None:
            values[v] = lo
        elif hi is not None:
            values[v] = min(hi, Fraction(0))
        else:
            values[v] = Fraction(0)
        if (lo is not None and values[v] < lo) or (hi is not None and values[v] > hi):
            raise Infeasible(frozenset())  # cannot happen if elimination is sound
    return tuple(values)
