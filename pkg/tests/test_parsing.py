import random

import pytest

from refilt.algebra import Word, normal_form_sum
from refilt.laurent import BaseElement
from refilt.parsing import (
    ParseError,
    emit_presentation,
    parse_element,
    parse_presentation,
    parse_scalar,
    render_element,
    render_scalar,
)
from refilt.presets import all_presets, quantum_plane
from refilt.sampling import random_element
from refilt.scalars import ONE, Q, Scalar, as_scalar

PLANE_FILE = """\
# quantum plane with the documented defaults
field rational_q
base 0
gens 2
grading 2
order deglex
q x2 x1 = q
"""


class TestScalarSyntax:
    def test_examples(self):
        assert parse_scalar("(q - q^-1)/(q^2 - 1)") == (Q - Q.inv()) / (Q**2 - ONE)
        assert parse_scalar("q^-1") == Q.inv()
        assert parse_scalar("-3/2") == as_scalar(-3) / as_scalar(2)
        assert parse_scalar("2*q^3 - q + 5") == as_scalar(2) * Q**3 - Q + as_scalar(5)

    def test_division_by_zero(self):
        with pytest.raises(ParseError):
            parse_scalar("1/(q - q)")

    def test_q_disallowed_without_flag(self):
        with pytest.raises(ParseError, match="rationals"):
            parse_scalar("q + 1", allow_q=False)

    def test_roundtrip_random(self):
        rng = random.Random(3)
        for _ in range(200):
            num = tuple(rng.randint(-5, 5) for _ in range(rng.randint(0, 4)))
            den = tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 4)))
            if not any(den):
                continue
            sc = Scalar(num, den)
            assert parse_scalar(render_scalar(sc)) == sc


class TestElementSyntax:
    def test_word_order_preserved(self, plane):
        words = parse_element(plane, "x2*x1")
        assert words == [Word((2, 1), ONE)]

    def test_pure_base_word(self, uq):
        words = parse_element(uq, "(q - q^-1) * z1")
        (w,) = words
        assert w.factors == (BaseElement.monomial(1, (1,)),)
        assert w.prefactor == Q - Q.inv()

    def test_negative_x_exponent_rejected(self, plane):
        with pytest.raises(ParseError, match="not invertible"):
            parse_element(plane, "x1^-1")

    def test_unknown_generator(self, plane):
        with pytest.raises(ParseError, match="unknown generator x3"):
            parse_element(plane, "x3")
        with pytest.raises(ParseError, match="unknown Laurent generator"):
            parse_element(plane, "z1")

    def test_sums_and_signs(self, plane):
        words = parse_element(plane, "-x1 + 2*x2 - x1*x2")
        assert [w.prefactor for w in words] == [-ONE, as_scalar(2), -ONE]

    def test_laurent_after_generator_rejected(self, uq):
        with pytest.raises(ParseError, match="Laurent factor after"):
            parse_element(uq, "x1*z1")

    @pytest.mark.parametrize("preset", ["plane", "weyl", "uq", "torus", "affine3"])
    def test_render_parse_normal_form_identity(self, preset, request):
        pres = request.getfixturevalue(preset)
        rng = random.Random(17)
        for _ in range(25):
            e = random_element(pres, rng)
            text = render_element(pres, e)
            assert normal_form_sum(pres, parse_element(pres, text)) == e

    def test_rendering_deterministic(self, uq):
        rng = random.Random(23)
        e = random_element(uq, rng)
        assert render_element(uq, e) == render_element(uq, e)


class TestPresentationFiles:
    def test_six_line_quantum_plane(self):
        assert parse_presentation(PLANE_FILE) == quantum_plane()

    def test_defaults_minimal_file(self):
        pres = parse_presentation("gens 2\nq x2 x1 = q\n")
        assert pres == quantum_plane()

    def test_tail_degree_bound_violation_cited(self):
        text = PLANE_FILE + "tail x2 x1 = x1*x2\n"
        with pytest.raises(ValueError, match="not strictly below"):
            parse_presentation(text)

    def test_wrong_q_index_order(self):
        with pytest.raises(ParseError, match="j > i"):
            parse_presentation("gens 2\nq x1 x2 = q\n")

    def test_error_carries_line_and_col(self):
        try:
            parse_presentation("gens 2\nq x1 x2 = q\n")
        except ParseError as exc:
            assert exc.line == 2
            assert exc.col >= 1
        else:
            pytest.fail("expected ParseError")

    def test_unknown_directive(self):
        with pytest.raises(ParseError, match="unknown directive"):
            parse_presentation("gens 2\nfrobnicate 3\n")

    def test_duplicate_directive(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_presentation("gens 2\ngens 3\n")

    def test_matrix_order(self):
        text = "gens 2\norder matrix (1,1) (0,1)\n"
        pres = parse_presentation(text)
        from refilt.orders import MatrixThenLex

        assert pres.order == MatrixThenLex(((1, 1), (0, 1)), None)

    def test_tail_requires_standard_order(self):
        text = "gens 3\nq x2 x1 = q\ntail x3 x1 = x2*x1\n"
        with pytest.raises(ParseError, match="standard order"):
            parse_presentation(text)

    def test_emit_parse_identity_for_presets(self):
        for name, pres in all_presets().items():
            assert parse_presentation(emit_presentation(pres)) == pres, name

    def test_rational_field_file(self):
        pres = parse_presentation("field rational\ngens 2\nq x2 x1 = 2\n")
        assert pres.field_kind == "rational"
        assert pres.q_scalar(2, 1) == as_scalar(2)
        with pytest.raises(ParseError, match="rationals"):
            parse_presentation("field rational\ngens 2\nq x2 x1 = q\n")
