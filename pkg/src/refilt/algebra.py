"""Bounded-extension presentations and the standard-representation engine.

A presentation records s generators x1..xs over a commutative Laurent base
of rank t, with unit semicommutation scalars q_ji (x_j x_i = q_ji x_i x_j +
tail), lam_ij (x_i z_j = lam_ij z_j x_i), a degree matrix M whose row i is
the multi-degree of x_i, and an admissible order on the grading monoid.
Every tail exponent gamma must satisfy gamma*M strictly below row_i + row_j:
this bound is what makes the rewriting below terminate.

Elements are kept in standard representation: a finite map from x-exponents
gamma in N^s to nonzero left coefficients in the base ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

from .laurent import BaseAutomorphism, BaseElement
from .orders import (
    GT,
    LT,
    AdmissibleOrder,
    RankMismatchError,
    add,
    apply_matrix,
    compare,
    deglex_order,
)
from .scalars import ONE, Scalar

FIELD_KINDS = ("rational", "rational_q")


class InvalidPresentationError(ValueError):
    """A presentation violates units, ranks or the tail degree bound."""


class Element:
    """Standard representation: finite map gamma -> nonzero BaseElement."""

    __slots__ = ("s", "t", "terms")

    def __init__(self, s: int, t: int, terms=None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != s:
                raise RankMismatchError(f"x-exponent {exp} has rank != {s}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative x-exponent {exp}")
            if not isinstance(coeff, BaseElement):
                raise TypeError("Element coefficients must be BaseElements")
            if coeff.rank != t:
                raise RankMismatchError("coefficient rank != t")
            if not coeff.is_zero():
                clean[exp] = coeff
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("Element is immutable")

    @classmethod
    def zero(cls, s: int, t: int) -> "Element":
        return cls(s, t, {})

    @classmethod
    def monomial(cls, s: int, t: int, exponent, coeff) -> "Element":
        return cls(s, t, {tuple(exponent): coeff})

    def items(self):
        return self.terms.items()

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Element") -> "Element":
        if (self.s, self.t) != (other.s, other.t):
            raise RankMismatchError("element shapes differ")
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out[exp] + c if exp in out else c
        return Element(self.s, self.t, out)

    def __neg__(self) -> "Element":
        return Element(self.s, self.t, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, s: Scalar) -> "Element":
        return Element(self.s, self.t, {e: c.scale(s) for e, c in self.terms.items()})

    def scale_base(self, b: BaseElement) -> "Element":
        """Left multiplication by a base element."""
        return Element(self.s, self.t, {e: b * c for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (self.s, self.t) == (other.s, other.t) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.s, self.t, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Element({self.s}, {self.t}, {self.terms!r})"


Atom = Union[int, BaseElement]


@dataclass(frozen=True)
class Word:
    """Unnormalized product: scalar prefactor times a sequence of atoms.

    Atoms are 1-based generator indices or base elements, in written
    (noncommutative) order.
    """

    factors: tuple
    prefactor: Scalar = ONE


@dataclass(frozen=True)
class Presentation:
    """Raw presentation data; build through make_presentation to validate."""

    field_kind: str
    t: int
    s: int
    n: int
    order: AdmissibleOrder
    degree_matrix: tuple  # s rows, each a tuple of length n with entries >= 0
    q: dict = field(default_factory=dict)  # (j, i) with j > i -> Scalar
    lam: dict = field(default_factory=dict)  # (i, j), generator x_i, coord z_j -> Scalar
    tails: dict = field(default_factory=dict)  # (j, i) with j > i -> Element

    def row(self, i: int) -> tuple:
        return self.degree_matrix[i - 1]

    def psi(self, gamma: tuple) -> tuple:
        """Image gamma * M in the grading monoid."""
        return apply_matrix(gamma, self.degree_matrix)

    def q_scalar(self, j: int, i: int) -> Scalar:
        return self.q.get((j, i), ONE)

    def lam_scalar(self, i: int, j: int) -> Scalar:
        return self.lam.get((i, j), ONE)

    def tail(self, j: int, i: int) -> Optional[Element]:
        return self.tails.get((j, i))

    def sigma(self, i: int) -> BaseAutomorphism:
        """Base automorphism induced by x_i: z_j -> lam_ij z_j."""
        return BaseAutomorphism(tuple(self.lam_scalar(i, j) for j in range(1, self.t + 1)))


def _check_scalar_kind(kind: str, s: Scalar, what: str):
    if kind == "rational" and not s.is_constant():
        raise InvalidPresentationError(f"{what} is not constant in a rational presentation")


def make_presentation(
    field_kind: str,
    t: int,
    s: int,
    n: Optional[int] = None,
    order: Optional[AdmissibleOrder] = None,
    degree_matrix=None,
    q=None,
    lam=None,
    tails=None,
) -> Presentation:
    """Validate and canonicalize a presentation.

    Defaults: n = s, degree matrix = identity (requires n = s), order =
    degree-then-lex with unit weights.  Unit q/lam entries and zero tails
    are dropped so equal presentations compare equal field-by-field.
    """
    if field_kind not in FIELD_KINDS:
        raise InvalidPresentationError(f"unknown field kind {field_kind!r}")
    if t < 0 or s < 1:
        raise InvalidPresentationError("need t >= 0 and s >= 1")
    if n is None:
        n = s
    if n < 1:
        raise InvalidPresentationError("grading rank must be >= 1")
    if degree_matrix is None:
        if n != s:
            raise InvalidPresentationError("degree matrix required when n != s")
        degree_matrix = tuple(
            tuple(1 if k == i else 0 for k in range(n)) for i in range(s)
        )
    degree_matrix = tuple(tuple(row) for row in degree_matrix)
    if len(degree_matrix) != s or any(len(row) != n for row in degree_matrix):
        raise InvalidPresentationError("degree matrix must be s rows of length n")
    if any(e < 0 for row in degree_matrix for e in row):
        raise InvalidPresentationError("degree matrix entries must be nonnegative")
    if order is None:
        order = deglex_order(n)
    if order.rank != n:
        raise InvalidPresentationError(f"order rank {order.rank} != grading rank {n}")

    cq = {}
    for (j, i), val in (q or {}).items():
        if not (1 <= i < j <= s):
            raise InvalidPresentationError(f"q indices ({j},{i}) must satisfy j > i")
        if val.is_zero():
            raise InvalidPresentationError(f"q[{j},{i}] must be a unit, got zero")
        _check_scalar_kind(field_kind, val, f"q[{j},{i}]")
        if not val.is_one():
            cq[(j, i)] = val

    clam = {}
    for (i, j), val in (lam or {}).items():
        if not (1 <= i <= s and 1 <= j <= t):
            raise InvalidPresentationError(f"comm indices ({i},{j}) out of range")
        if val.is_zero():
            raise InvalidPresentationError(f"lam[{i},{j}] must be a unit, got zero")
        _check_scalar_kind(field_kind, val, f"lam[{i},{j}]")
        if not val.is_one():
            clam[(i, j)] = val

    pres = Presentation(field_kind, t, s, n, order, degree_matrix, cq, clam, {})

    ctails = {}
    for (j, i), elt in (tails or {}).items():
        if not (1 <= i < j <= s):
            raise InvalidPresentationError(f"tail indices ({j},{i}) must satisfy j > i")
        if not isinstance(elt, Element):
            raise InvalidPresentationError("tails must be Elements")
        if (elt.s, elt.t) != (s, t):
            raise InvalidPresentationError("tail shape does not match presentation")
        if elt.is_zero():
            continue
        bound = add(pres.row(i), pres.row(j))
        for gamma, coeff in elt.items():
            if compare(order, pres.psi(gamma), bound) != LT:
                raise InvalidPresentationError(
                    f"tail x{j} x{i}: exponent {gamma} has degree {pres.psi(gamma)} "
                    f"not strictly below {bound}"
                )
            for sc in coeff.terms.values():
                _check_scalar_kind(field_kind, sc, f"tail x{j} x{i} coefficient")
        ctails[(j, i)] = elt

    return Presentation(field_kind, t, s, n, order, degree_matrix, cq, clam, ctails)


def validate_presentation(pres: Presentation):
    """Re-run all make_presentation checks on an existing presentation."""
    make_presentation(
        pres.field_kind,
        pres.t,
        pres.s,
        pres.n,
        pres.order,
        pres.degree_matrix,
        pres.q,
        pres.lam,
        pres.tails,
    )


def gens_of(gamma: tuple) -> list:
    """Ascending generator list of the standard monomial x^gamma."""
    out = []
    for i, e in enumerate(gamma, start=1):
        out.extend([i] * e)
    return out


def exponent_of(gens: list, s: int) -> tuple:
    exp = [0] * s
    for g in gens:
        exp[g - 1] += 1
    return tuple(exp)


@lru_cache(maxsize=4096)
def _scalar_pow(sc: Scalar, e: int) -> Scalar:
    return sc**e


def cross_factor(pres: Presentation, i: int, exp: tuple) -> Scalar:
    """Scalar picked up when x_i moves right across the monomial z^exp."""
    f = ONE
    for j, e in enumerate(exp, start=1):
        if e:
            f = f * _scalar_pow(pres.lam_scalar(i, j), e)
    return f


def cross_base(pres: Presentation, i: int, b: BaseElement) -> BaseElement:
    """sigma_i(b): commute x_i rightward across the base element b."""
    out = {}
    for exp, c in b.terms.items():
        out[exp] = c * cross_factor(pres, i, exp)
    return BaseElement(b.rank, out)


def normal_form(pres: Presentation, word: Word) -> Element:
    """Standard representation of a word by exhaustive rewriting.

    Fixed strategy: collect base atoms to the left (scanning left to right),
    then repeatedly resolve the leftmost descent x_j x_i (j > i) through
    x_j x_i = q_ji x_i x_j + tail.  Terminates because every tail exponent
    has strictly smaller degree image.
    """
    out = Element.zero(pres.s, pres.t)
    stack = [(word.prefactor, list(word.factors))]
    while stack:
        pref, factors = stack.pop()
        if pref.is_zero():
            continue
        coeff = BaseElement.one(pres.t)
        gens: list = []
        dead = False
        for f in factors:
            if isinstance(f, BaseElement):
                b = f
                for g in gens:
                    b = cross_base(pres, g, b)
                coeff = coeff * b
                if coeff.is_zero():
                    dead = True
                    break
            elif isinstance(f, int) and not isinstance(f, bool):
                if not 1 <= f <= pres.s:
                    raise ValueError(f"generator index {f} out of range")
                gens.append(f)
            else:
                raise TypeError(f"bad word atom {f!r}")
        if dead:
            continue
        p = next((k for k in range(len(gens) - 1) if gens[k] > gens[k + 1]), None)
        if p is None:
            exp = exponent_of(gens, pres.s)
            out = out + Element.monomial(pres.s, pres.t, exp, coeff.scale(pref))
            continue
        j, i = gens[p], gens[p + 1]
        swapped = gens[:p] + [i, j] + gens[p + 2 :]
        stack.append((pref * pres.q_scalar(j, i), [coeff] + swapped))
        tail = pres.tail(j, i)
        if tail is not None:
            for gamma, c in tail.items():
                stack.append(
                    (pref, [coeff] + gens[:p] + [c] + gens_of(gamma) + gens[p + 2 :])
                )
    return out


def normal_form_sum(pres: Presentation, words) -> Element:
    out = Element.zero(pres.s, pres.t)
    for w in words:
        out = out + normal_form(pres, w)
    return out


def multiply(pres: Presentation, a: Element, b: Element) -> Element:
    """Product in standard representation."""
    out = Element.zero(pres.s, pres.t)
    for ga, ca in a.items():
        for gb, cb in b.items():
            w = Word(tuple([ca] + gens_of(ga) + [cb] + gens_of(gb)))
            out = out + normal_form(pres, w)
    return out


def mdeg(pres: Presentation, e: Element) -> tuple:
    """Multi-degree: order-maximum of gamma * M over the support."""
    if e.is_zero():
        raise ValueError("the zero element has no multi-degree")
    best = None
    for gamma in e.terms:
        img = pres.psi(gamma)
        if best is None or compare(pres.order, img, best) == GT:
            best = img
    return best


def filtration_contains(pres: Presentation, e: Element, alpha: tuple) -> bool:
    """Whether e lies in the filtration piece indexed by alpha."""
    if len(alpha) != pres.n:
        raise RankMismatchError(f"index rank {len(alpha)} != grading rank {pres.n}")
    if e.is_zero():
        return True
    return all(compare(pres.order, pres.psi(g), alpha) != GT for g in e.terms)
