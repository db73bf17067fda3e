import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

from refilt.presets import (  # noqa: E402
    quantum_affine,
    quantum_plane,
    quantum_torus_mixed,
    quantum_weyl,
    uq_sl2,
)


@pytest.fixture(scope="session")
def plane():
    return quantum_plane()


@pytest.fixture(scope="session")
def affine3():
    return quantum_affine(3)


@pytest.fixture(scope="session")
def weyl():
    return quantum_weyl()


@pytest.fixture(scope="session")
def uq():
    return uq_sl2()


@pytest.fixture(scope="session")
def torus():
    return quantum_torus_mixed(1, 2)


@pytest.fixture(scope="session")
def all_passing(plane, affine3, weyl, uq, torus):
    return {
        "quantum_plane": plane,
        "quantum_affine3": affine3,
        "quantum_weyl": weyl,
        "uq_sl2": uq,
        "quantum_torus_mixed": torus,
    }


@pytest.fixture(scope="session")
def broken3():
    """Valid presentation whose rewriting is not confluent."""
    from refilt.algebra import Element, make_presentation
    from refilt.laurent import BaseElement
    from refilt.scalars import Q

    tail = Element.monomial(3, 0, (0, 1, 0), BaseElement.one(0))
    return make_presentation("rational_q", t=0, s=3, q={(2, 1): Q}, tails={(3, 1): tail})
