"""Reference rewriter for cross-checking the engine's normal forms.

Deliberately independent of refilt.algebra.normal_form: it keeps a flat sum
of scaled words and applies single rewrite steps at RANDOM applicable
positions until none remain.  Only the presentation data and the exact
arithmetic types are shared with the engine.

Rewrite steps:
  (R1) at position p: generator immediately followed by a base atom;
       x_i * b -> sigma_i(b) * x_i, computed from the lam table directly.
  (R2) at position p: adjacent generators with a descent (j > i);
       x_j x_i -> q_ji x_i x_j + tail terms.
"""

from __future__ import annotations

import random

from refilt.algebra import Element, Presentation, Word, gens_of
from refilt.laurent import BaseElement
from refilt.scalars import Scalar


def _sigma(pres: Presentation, i: int, b: BaseElement) -> BaseElement:
    out = {}
    for exp, c in b.terms.items():
        f = c
        for j, e in enumerate(exp, start=1):
            if e:
                f = f * pres.lam_scalar(i, j) ** e
        out[exp] = f
    return BaseElement(b.rank, out)


def _positions(factors):
    pos = []
    for p in range(len(factors) - 1):
        a, b = factors[p], factors[p + 1]
        a_gen, b_gen = isinstance(a, int), isinstance(b, int)
        if a_gen and not b_gen:
            pos.append(("r1", p))
        elif a_gen and b_gen and a > b:
            pos.append(("r2", p))
    return pos


def _apply(pres: Presentation, pref: Scalar, factors: list, kind: str, p: int):
    """Return the list of (prefactor, factors) replacing the word."""
    if kind == "r1":
        i, b = factors[p], factors[p + 1]
        moved = _sigma(pres, i, b)
        if moved.is_zero():
            return []
        return [(pref, factors[:p] + [moved, i] + factors[p + 2 :])]
    j, i = factors[p], factors[p + 1]
    out = [(pref * pres.q_scalar(j, i), factors[:p] + [i, j] + factors[p + 2 :])]
    tail = pres.tail(j, i)
    if tail is not None:
        for gamma, coeff in tail.items():
            mid: list = [coeff] + gens_of(gamma)
            out.append((pref, factors[:p] + mid + factors[p + 2 :]))
    return out


def oracle_normal_form(pres: Presentation, word: Word, rng: random.Random) -> Element:
    """Normal form by random-position single-step rewriting."""
    active = [(word.prefactor, list(word.factors))]
    finished = []
    while active:
        k = rng.randrange(len(active))
        pref, factors = active.pop(k)
        pos = _positions(factors)
        if not pos:
            finished.append((pref, factors))
            continue
        kind, p = pos[rng.randrange(len(pos))]
        active.extend(_apply(pres, pref, factors, kind, p))

    total = Element.zero(pres.s, pres.t)
    for pref, factors in finished:
        coeff = BaseElement.one(pres.t)
        exp = [0] * pres.s
        for f in factors:
            if isinstance(f, int):
                exp[f - 1] += 1
            else:
                coeff = coeff * f
        term = Element.monomial(pres.s, pres.t, tuple(exp), coeff.scale(pref))
        total = total + term
    return total
