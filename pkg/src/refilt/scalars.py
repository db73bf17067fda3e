"""Exact coefficient arithmetic: rationals and rational functions of q.

A Scalar is a reduced fraction num/den of integer-coefficient univariate
polynomials in q, stored as ascending coefficient tuples.  Canonical form:
num and den share no content and no polynomial factor, den has positive
leading coefficient, zero is 0/1.  Constants are exactly the reduced
rationals, so one class covers both field kinds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Union

Poly = tuple  # int coefficients, ascending powers of q, no trailing zeros

P_ZERO: Poly = ()
P_ONE: Poly = (1,)


def ptrim(cs) -> Poly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ptrim(out)


def pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return P_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return ptrim(out)


def ppow(a: Poly, e: int) -> Poly:
    if e < 0:
        raise ValueError("negative polynomial power")
    out = P_ONE
    base = a
    while e:
        if e & 1:
            out = pmul(out, base)
        base = pmul(base, base)
        e >>= 1
    return out


def pcontent(a: Poly) -> int:
    c = 0
    for x in a:
        c = gcd(c, abs(x))
    return c


def pprimitive(a: Poly) -> Poly:
    c = pcontent(a)
    if c <= 1:
        return a
    return tuple(x // c for x in a)


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b (b nonzero), exact over the integers."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return a
    lb = b[-1]
    r = list(a)
    for k in range(da - db, -1, -1):
        lead = r[db + k]
        if lead != 0:
            for i in range(len(r)):
                r[i] *= lb
            for i, c in enumerate(b):
                r[i + k] -= lead * c
        # r[db+k] is now zero
    return ptrim(r[:db])


def pgcd(a: Poly, b: Poly) -> Poly:
    """Gcd in Z[q], normalized to positive leading coefficient."""
    a, b = ptrim(a), ptrim(b)
    if not a and not b:
        return P_ZERO
    ca, cb = pcontent(a), pcontent(b)
    c = gcd(ca, cb)
    x, y = pprimitive(a), pprimitive(b)
    while y:
        x, y = y, pprimitive(_prem(x, y))
    g = pmul((c,), x) if x else (c,)
    if g and g[-1] < 0:
        g = pneg(g)
    return g


def pdiv_exact(a: Poly, b: Poly) -> Poly:
    """Exact division a/b; raises if b does not divide a."""
    a, b = ptrim(a), ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return P_ZERO
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise ValueError("non-exact polynomial division")
    r = list(a)
    out = [0] * (da - db + 1)
    lb = b[-1]
    for k in range(da - db, -1, -1):
        lead = r[db + k]
        if lead % lb != 0:
            raise ValueError("non-exact polynomial division")
        qk = lead // lb
        out[k] = qk
        if qk:
            for i, c in enumerate(b):
                r[i + k] -= qk * c
    if any(r):
        raise ValueError("non-exact polynomial division")
    return ptrim(out)


class Scalar:
    """Immutable element of Q(q) in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=P_ONE):
        num = ptrim(num)
        den = ptrim(den)
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            den = P_ONE
        else:
            g = pgcd(num, den)
            if g != P_ONE:
                num = pdiv_exact(num, g)
                den = pdiv_exact(den, g)
            if den[-1] < 0:
                num, den = pneg(num), pneg(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    # constructors ---------------------------------------------------------
    @classmethod
    def from_int(cls, n: int) -> "Scalar":
        return cls((n,) if n else P_ZERO)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Scalar":
        return cls((f.numerator,) if f.numerator else P_ZERO, (f.denominator,))

    @classmethod
    def q_power(cls, e: int) -> "Scalar":
        if e >= 0:
            return cls((0,) * e + (1,))
        return cls(P_ONE, (0,) * (-e) + (1,))

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == P_ONE and self.den == P_ONE

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant scalar")
        n = self.num[0] if self.num else 0
        return Fraction(n, self.den[0])

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(
            psub(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __neg__(self) -> "Scalar":
        return Scalar(pneg(self.num), self.den)

    def __mul__(self, other: "Scalar") -> "Scalar":
        return Scalar(pmul(self.num, other.num), pmul(self.den, other.den))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(pmul(self.num, other.den), pmul(self.den, other.num))

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.den, self.num)

    def __pow__(self, e: int) -> "Scalar":
        if e < 0:
            return self.inv() ** (-e)
        return Scalar(ppow(self.num, e), ppow(self.den, e))

    # identity -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"Scalar({self.num!r}, {self.den!r})"


ZERO = Scalar(P_ZERO)
ONE = Scalar(P_ONE)
Q = Scalar.q_power(1)


def as_scalar(v: Union["Scalar", int, Fraction]) -> Scalar:
    if isinstance(v, Scalar):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(v, int):
        return Scalar.from_int(v)
    if isinstance(v, Fraction):
        return Scalar.from_fraction(v)
    raise TypeError(f"cannot coerce {type(v).__name__} to Scalar")


def cross_equal(a: Scalar, b: Scalar) -> bool:
    """Equality via cross-multiplication, bypassing canonical forms."""
    return pmul(a.num, b.den) == pmul(b.num, a.den)
