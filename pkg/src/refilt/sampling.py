"""Seeded random inputs for property checks (inputs only, never expectations)."""

from __future__ import annotations

import random

from .algebra import Element, Presentation, Word
from .laurent import BaseElement
from .scalars import Q, Scalar, as_scalar


def random_scalar(pres: Presentation, rng: random.Random) -> Scalar:
    consts = [as_scalar(v) for v in (1, -1, 2, 3, -2)]
    if pres.field_kind == "rational_q":
        consts += [Q, Q.inv(), Q + as_scalar(1), Q**2, -Q]
    return consts[rng.randrange(len(consts))]


def random_base(pres: Presentation, rng: random.Random, max_terms: int = 2) -> BaseElement:
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        exp = tuple(rng.randrange(-2, 3) for _ in range(pres.t))
        terms[exp] = random_scalar(pres, rng)
    b = BaseElement(pres.t, terms)
    return b if not b.is_zero() else BaseElement.one(pres.t)


def random_word(pres: Presentation, rng: random.Random, max_len: int = 6) -> Word:
    length = rng.randrange(0, max_len + 1)
    factors = []
    for _ in range(length):
        if pres.t and rng.random() < 0.25:
            factors.append(random_base(pres, rng))
        else:
            factors.append(rng.randrange(1, pres.s + 1))
    return Word(tuple(factors), random_scalar(pres, rng))


def random_element(
    pres: Presentation, rng: random.Random, max_terms: int = 3, max_exp: int = 2
) -> Element:
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        gamma = tuple(rng.randrange(0, max_exp + 1) for _ in range(pres.s))
        terms[gamma] = random_base(pres, rng)
    e = Element(pres.s, pres.t, terms)
    if e.is_zero():
        return Element.monomial(pres.s, pres.t, (0,) * pres.s, BaseElement.one(pres.t))
    return e
