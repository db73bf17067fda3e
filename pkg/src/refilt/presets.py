"""Canonical presentations exercising every pipeline stage at desk scale."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Element, Presentation, make_presentation
from .laurent import BaseElement
from .scalars import ONE, Q, Scalar, as_scalar

PRESET_NAMES = (
    "quantum_plane",
    "quantum_affine",
    "quantum_torus_mixed",
    "quantum_weyl",
    "uq_sl2",
)


@dataclass(frozen=True)
class PresetSpec:
    name: str
    parameters: dict = field(default_factory=dict)


def quantum_plane(qhat: Scalar = Q) -> Presentation:
    """Two generators, x2 x1 = qhat x1 x2, no base ring."""
    return make_presentation("rational_q", t=0, s=2, q={(2, 1): qhat})


def quantum_affine(s: int, units=None) -> Presentation:
    """s generators with x_j x_i = q_ji x_i x_j; default entries are q."""
    if units is None:
        units = {}
    q = {
        (j, i): units.get((j, i), Q)
        for i in range(1, s + 1)
        for j in range(i + 1, s + 1)
    }
    return make_presentation("rational_q", t=0, s=s, q=q)


def quantum_torus_mixed(t: int, s: int, lam=None, units=None) -> Presentation:
    """Laurent base of rank t with x-generators semicommuting through lam.

    This is the commutative-Laurent slice of a localized quantum space: the
    inverted coordinates commute among themselves here, so a genuinely
    noncommutative quantum torus is NOT representable and is not attempted.
    """
    if lam is None:
        lam = {(i, j): Q for i in range(1, s + 1) for j in range(1, t + 1)}
    if units is None:
        units = {
            (j, i): Q for i in range(1, s + 1) for j in range(i + 1, s + 1)
        }
    return make_presentation("rational_q", t=t, s=s, q=units, lam=lam)


def quantum_weyl(qhat: Scalar = Q) -> Presentation:
    """x2 x1 = qhat x1 x2 + 1."""
    tail = Element.monomial(2, 0, (0, 0), BaseElement.one(0))
    return make_presentation("rational_q", t=0, s=2, q={(2, 1): qhat}, tails={(2, 1): tail})


def uq_sl2() -> Presentation:
    """Laurent generator K = z1, x1 = F, x2 = E.

    Relations: F K = q^2 K F, E K = q^-2 K E, and
    E F = F E + (K - K^-1)/(q - q^-1).
    """
    qm = Q - Q.inv()  # q - q^-1 = (q^2 - 1)/q
    coeff = qm.inv()
    tail_base = BaseElement(1, {(1,): coeff, (-1,): -coeff})
    tail = Element.monomial(2, 1, (0, 0), tail_base)
    return make_presentation(
        "rational_q",
        t=1,
        s=2,
        lam={(1, 1): Q**2, (2, 1): Q**-2},
        q={(2, 1): ONE},
        tails={(2, 1): tail},
    )


def load_preset(spec: PresetSpec) -> Presentation:
    """Build a preset from a name and a parameter map.

    Parameter values may be ints, Scalars, or strings in the scalar syntax.
    Unit entries use keys like "q21" (x2 against x1) and "lam12" (x1 against
    z2); single-digit indices only, which covers desk scale.
    """
    name = spec.name
    if name not in PRESET_NAMES:
        raise ValueError(f"unknown preset {name!r}")
    params = dict(spec.parameters)

    def scalar(value) -> Scalar:
        if isinstance(value, str):
            from .parsing import parse_scalar

            return parse_scalar(value)
        return as_scalar(value)

    def intval(value) -> int:
        return int(value)

    def unit_map(prefix: str, swap: bool) -> dict:
        out = {}
        for key in list(params):
            if key.startswith(prefix) and key[len(prefix) :].isdigit():
                digits = key[len(prefix) :]
                if len(digits) != 2:
                    raise ValueError(f"bad preset parameter {key!r}")
                a, b = int(digits[0]), int(digits[1])
                out[(a, b) if not swap else (a, b)] = scalar(params.pop(key))
        return out

    if name == "quantum_plane":
        qhat = scalar(params.pop("q", Q))
        _reject_extra(params)
        return quantum_plane(qhat)
    if name == "quantum_affine":
        s = intval(params.pop("s", 2))
        units = unit_map("q", False)
        _reject_extra(params)
        return quantum_affine(s, units or None)
    if name == "quantum_torus_mixed":
        t = intval(params.pop("t", 1))
        s = intval(params.pop("s", 2))
        units = unit_map("q", False)
        lam = unit_map("lam", True)
        _reject_extra(params)
        return quantum_torus_mixed(t, s, lam or None, units or None)
    if name == "quantum_weyl":
        qhat = scalar(params.pop("q", Q))
        _reject_extra(params)
        return quantum_weyl(qhat)
    _reject_extra(params)
    return uq_sl2()


def _reject_extra(params: dict):
    if params:
        raise ValueError(f"unrecognized preset parameters {sorted(params)}")


def all_presets() -> dict:
    """Default instance of every preset, keyed by name."""
    return {
        "quantum_plane": quantum_plane(),
        "quantum_affine": quantum_affine(3),
        "quantum_torus_mixed": quantum_torus_mixed(1, 2),
        "quantum_weyl": quantum_weyl(),
        "uq_sl2": uq_sl2(),
    }
