"""Commutative Laurent polynomial base ring over the scalar field.

Elements are finite maps from signed exponent tuples (length t) to nonzero
Scalars.  The standard degree gives every z_j and z_j^-1 degree 1, so the
degree of an exponent is the sum of absolute values.  Rank t = 0 is allowed
and makes the base ring the scalar field itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orders import RankMismatchError
from .scalars import ONE, Scalar, as_scalar


class BaseElement:
    """Immutable element of k[z1^±1, ..., zt^±1] in canonical form."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != rank:
                raise RankMismatchError(f"exponent {exp} has rank != {rank}")
            coeff = as_scalar(coeff)
            if not coeff.is_zero():
                clean[exp] = coeff
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("BaseElement is immutable")

    @classmethod
    def zero(cls, rank: int) -> "BaseElement":
        return cls(rank, {})

    @classmethod
    def one(cls, rank: int) -> "BaseElement":
        return cls(rank, {(0,) * rank: ONE})

    @classmethod
    def monomial(cls, rank: int, exponent, coeff=ONE) -> "BaseElement":
        return cls(rank, {tuple(exponent): as_scalar(coeff)})

    @classmethod
    def constant(cls, rank: int, coeff) -> "BaseElement":
        return cls(rank, {(0,) * rank: as_scalar(coeff)})

    def items(self):
        return self.terms.items()

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.rank: ONE}

    def _check(self, other: "BaseElement"):
        if self.rank != other.rank:
            raise RankMismatchError(f"base ranks differ: {self.rank} vs {other.rank}")

    def __add__(self, other: "BaseElement") -> "BaseElement":
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out[exp] + c if exp in out else c
        return BaseElement(self.rank, out)

    def __neg__(self) -> "BaseElement":
        return BaseElement(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "BaseElement") -> "BaseElement":
        return self + (-other)

    def __mul__(self, other: "BaseElement") -> "BaseElement":
        self._check(other)
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                out[exp] = out[exp] + c if exp in out else c
        return BaseElement(self.rank, out)

    def scale(self, s: Scalar) -> "BaseElement":
        s = as_scalar(s)
        if s.is_zero():
            return BaseElement.zero(self.rank)
        return BaseElement(self.rank, {e: c * s for e, c in self.terms.items()})

    def degree(self):
        """Standard degree max sum |beta_j|; None marks the zero element."""
        if not self.terms:
            return None
        return max(sum(abs(x) for x in e) for e in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BaseElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"BaseElement({self.rank}, {self.terms!r})"


@dataclass(frozen=True)
class BaseAutomorphism:
    """Monomial automorphism z_j -> scale_j * z_j; scales must be nonzero."""

    scales: tuple

    def __post_init__(self):
        if any(s.is_zero() for s in self.scales):
            raise ValueError("automorphism scale must be nonzero")

    @property
    def rank(self) -> int:
        return len(self.scales)

    def apply(self, a: BaseElement) -> BaseElement:
        if a.rank != self.rank:
            raise RankMismatchError(f"ranks differ: {a.rank} vs {self.rank}")
        out = {}
        for exp, c in a.terms.items():
            f = c
            for s, e in zip(self.scales, exp):
                if e:
                    f = f * s**e
            out[exp] = f
        return BaseElement(a.rank, out)


def base_mul(a: BaseElement, b: BaseElement) -> BaseElement:
    return a * b


def base_apply(auto: BaseAutomorphism, a: BaseElement) -> BaseElement:
    return auto.apply(a)


def base_degree(a: BaseElement):
    return a.degree()
