"""Multi-index arithmetic and admissible total orders on exponent monoids.

Multi-indices are plain tuples of ints.  Exponents of the grading monoid are
nonnegative; signed tuples appear for Laurent exponents and C-set points and
are compared through the translation-invariant shift extension
(`compare_signed`).  Generator and coordinate numbering is 1-based everywhere
in the public surface (x1..xs, z1..zt), matching the rest of the package.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Union

LT, EQ, GT = -1, 0, 1


class RankMismatchError(ValueError):
    """Raised when vectors of different ranks meet an order or each other."""


def add(a: tuple, b: tuple) -> tuple:
    if len(a) != len(b):
        raise RankMismatchError(f"rank mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def support(a: tuple) -> set:
    """1-based positions of the nonzero entries."""
    return {i + 1 for i, v in enumerate(a) if v != 0}


def dot(a: tuple, b: tuple) -> int:
    if len(a) != len(b):
        raise RankMismatchError(f"rank mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def apply_matrix(v: tuple, rows: tuple) -> tuple:
    """Row vector times matrix given as a tuple of rows: sum_i v_i * rows[i]."""
    if len(v) != len(rows):
        raise RankMismatchError(f"vector rank {len(v)} vs matrix rows {len(rows)}")
    width = len(rows[0]) if rows else 0
    out = [0] * width
    for vi, row in zip(v, rows):
        if vi == 0:
            continue
        if len(row) != width:
            raise RankMismatchError("ragged matrix")
        for k, rk in enumerate(row):
            out[k] += vi * rk
    return tuple(out)


def _lex(a: tuple, b: tuple) -> int:
    for x, y in zip(a, b):
        if x != y:
            return LT if x < y else GT
    return EQ


@dataclass(frozen=True)
class Lex:
    """Lexicographic order along a 1-based coordinate priority permutation."""

    priority: tuple

    @property
    def rank(self) -> int:
        return len(self.priority)

    def _cmp(self, a: tuple, b: tuple) -> int:
        for p in self.priority:
            x, y = a[p - 1], b[p - 1]
            if x != y:
                return LT if x < y else GT
        return EQ


@dataclass(frozen=True)
class DegThenLex:
    """Weighted total degree first, plain lex as tiebreak.

    Weights must be positive for admissibility (zero weights lose totality
    only if the tiebreak is removed; the probe demonstrates that case on a
    raw comparator).
    """

    weights: tuple

    @property
    def rank(self) -> int:
        return len(self.weights)

    def _cmp(self, a: tuple, b: tuple) -> int:
        da, db = dot(self.weights, a), dot(self.weights, b)
        if da != db:
            return LT if da < db else GT
        return _lex(a, b)


@dataclass(frozen=True)
class MatrixThenLex:
    """Compare images under a right-applied integer matrix, then plain lex.

    `image_order` is the admissible order used on the image vectors; when
    None, coordinate lex is used.  Image vectors may leave the nonnegative
    orthant for signed inputs, so they are compared via `compare_signed`.
    """

    matrix: tuple
    image_order: Optional["AdmissibleOrder"] = None

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def _cmp(self, a: tuple, b: tuple) -> int:
        ia, ib = apply_matrix(a, self.matrix), apply_matrix(b, self.matrix)
        inner = self.image_order
        if inner is None:
            c = _lex(ia, ib)
        else:
            c = compare_signed(inner, ia, ib)
        if c != EQ:
            return c
        return _lex(a, b)


@dataclass(frozen=True)
class PairProduct:
    """Order on a concatenated pair (inner block | outer block).

    The outer block decides first; ties fall back to the inner block.  The
    inner block occupies the first `inner.rank` coordinates.
    """

    inner: "AdmissibleOrder"
    outer: "AdmissibleOrder"

    @property
    def rank(self) -> int:
        return self.inner.rank + self.outer.rank

    def _cmp(self, a: tuple, b: tuple) -> int:
        k = self.inner.rank
        c = self.outer._cmp(a[k:], b[k:])
        if c != EQ:
            return c
        return self.inner._cmp(a[:k], b[:k])


AdmissibleOrder = Union[Lex, DegThenLex, MatrixThenLex, PairProduct]


def lex_order(rank: int) -> Lex:
    return Lex(tuple(range(1, rank + 1)))


def deglex_order(rank: int) -> DegThenLex:
    return DegThenLex((1,) * rank)


def compare(order: AdmissibleOrder, a: tuple, b: tuple) -> int:
    """Return LT, EQ or GT for a against b under the order."""
    if len(a) != len(b) or len(a) != order.rank:
        raise RankMismatchError(
            f"rank mismatch: |a|={len(a)}, |b|={len(b)}, order rank {order.rank}"
        )
    return order._cmp(a, b)


def compare_signed(order: AdmissibleOrder, a: tuple, b: tuple) -> int:
    """Compare possibly-signed vectors by shifting both into the orthant.

    Well-defined for admissible orders by translation invariance.
    """
    if len(a) != len(b):
        raise RankMismatchError(f"rank mismatch: {len(a)} vs {len(b)}")
    shift = tuple(max(0, -x, -y) for x, y in zip(a, b))
    return compare(order, add(a, shift), add(b, shift))


def dickson_minimals(points) -> set:
    """Subset minimal under componentwise <=; every input dominates a result.

    Sorting by coordinate sum guarantees any strict dominator of a point is
    seen before the point itself.
    """
    pts = set(points)
    ranks = {len(p) for p in pts}
    if len(ranks) > 1:
        raise RankMismatchError("points of mixed rank")
    kept: list = []
    for p in sorted(pts, key=lambda v: (sum(v), v)):
        if not any(all(x <= y for x, y in zip(q, p)) for q in kept):
            kept.append(p)
    return set(kept)


@dataclass
class ProbeReport:
    passed: bool
    witness: Optional[tuple] = None  # (axiom name, offending vectors...)


Comparator = Callable[[tuple, tuple], int]


def admissibility_probe(
    order: Union[AdmissibleOrder, Comparator],
    sample_count: int,
    rank: int,
    seed: int,
) -> ProbeReport:
    """Probe totality, translation invariance and zero minimality.

    Accepts either an order variant or a raw comparator returning LT/EQ/GT,
    so deliberately broken comparators can be exercised.  The first violated
    axiom is returned with a concrete witness.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    cmp: Comparator
    if callable(order) and not hasattr(order, "_cmp"):
        cmp = order
    else:
        cmp = lambda a, b: compare(order, a, b)  # noqa: E731

    rng = random.Random(seed)
    zero = (0,) * rank

    def sample() -> tuple:
        return tuple(rng.randrange(0, 9) for _ in range(rank))

    for _ in range(sample_count):
        a, b, c = sample(), sample(), sample()
        ab, ba = cmp(a, b), cmp(b, a)
        if ab not in (LT, EQ, GT) or ab != -ba:
            return ProbeReport(False, ("totality", a, b))
        if (ab == EQ) != (a == b):
            return ProbeReport(False, ("totality", a, b))
        if cmp(a, a) != EQ:
            return ProbeReport(False, ("totality", a, a))
        if ab == LT and cmp(add(a, c), add(b, c)) != LT:
            return ProbeReport(False, ("translation", a, b, c))
        if cmp(zero, a) == GT:
            return ProbeReport(False, ("zero_minimality", a))
        # transitivity on the sampled triple, sorted by the comparator
        lo, mid, hi = a, b, c
        if cmp(lo, mid) == GT:
            lo, mid = mid, lo
        if cmp(mid, hi) == GT:
            mid, hi = hi, mid
        if cmp(lo, mid) == GT:
            lo, mid = mid, lo
        if cmp(lo, mid) != GT and cmp(mid, hi) != GT and cmp(lo, hi) == GT:
            return ProbeReport(False, ("transitivity", lo, mid, hi))
    return ProbeReport(True, None)
