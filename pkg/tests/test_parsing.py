import pytest
from fractions import Fraction

from extcohom import (
    Element,
    NonHomogeneousDifferential,
    ParseError,
    format_element,
    heisenberg,
    load_model,
    parse_element,
    parse_model,
    wedge,
)
from extcohom.parsing import HEISENBERG_MODEL_TEXT
from conftest import random_element, seeded


@pytest.fixture
def H():
    return heisenberg()


class TestParseElement:
    def test_single_monomial(self, H):
        assert parse_element(H, "x^y") == Element.monomial((0, 1))

    def test_two_terms_with_rational_coefficient(self, H):
        expected = Element({(0, 1): Fraction(3, 2), (1, 2): -1})
        assert parse_element(H, "3/2 x^y - y^w") == expected

    def test_reversed_word_normalizes_with_sign(self, H):
        assert parse_element(H, "y^x") == Element.monomial((0, 1), -1)

    def test_repeated_generator_collapses_to_zero(self, H):
        assert parse_element(H, "x^x").is_zero

    def test_leading_sign(self, H):
        assert parse_element(H, "-x^w") == Element.monomial((0, 2), -1)
        assert parse_element(H, "+2 w") == Element.monomial((2,), 2)

    def test_coefficient_without_space(self, H):
        assert parse_element(H, "2x") == Element.monomial((0,), 2)

    def test_zero_literal(self, H):
        assert parse_element(H, "0").is_zero

    def test_cancellation(self, H):
        assert parse_element(H, "x - x").is_zero

    def test_bare_rational_is_a_degree_zero_term(self, H):
        assert parse_element(H, "5") == Element.unit(5)
        assert parse_element(H, "1/2 + x") == Element.unit(Fraction(1, 2)) + Element.monomial((0,))

    def test_unknown_generator(self, H):
        with pytest.raises(ParseError) as info:
            parse_element(H, "x^q")
        assert "unknown generator" in str(info.value)
        assert info.value.column == 3

    def test_syntax_errors(self, H):
        for bad in ("", "x +", "^x", "x ^ ^ y", "x y", "3/0 x", "x + * y"):
            with pytest.raises(ParseError):
                parse_element(H, bad)

    def test_round_trip_on_random_elements(self, H):
        rng = seeded("parse-round-trip")
        for _ in range(200):
            e = random_element(rng, H)
            assert parse_element(H, format_element(H, e)) == e

    def test_format_examples(self, H):
        x, y, w = H.gen("x"), H.gen("y"), H.gen("w")
        assert format_element(H, Element.zero()) == "0"
        assert format_element(H, wedge(x, y)) == "x^y"
        assert format_element(H, -wedge(x, y)) == "-x^y"
        assert format_element(H, Fraction(3, 2) * wedge(x, y) - wedge(y, w)) == "3/2 x^y - y^w"
        assert format_element(H, 2 * y + w) == "2 y + w"


class TestParseModel:
    def test_builtin_text(self):
        model = parse_model(HEISENBERG_MODEL_TEXT)
        assert model == heisenberg()

    def test_comments_and_blank_lines(self):
        text = """
        # a comment
        generator x   # trailing comment

        generator y
        generator w
        d w = x^y
        """
        assert parse_model(text) == heisenberg()

    def test_empty_model(self):
        model = parse_model("")
        assert model.ngens == 0

    def test_default_differential_is_zero(self):
        model = parse_model("generator x\ngenerator y\n")
        assert model.differential(model.gen("x")).is_zero

    def test_non_homogeneous_differential(self):
        with pytest.raises(NonHomogeneousDifferential) as info:
            parse_model("generator x\ngenerator w\nd w = x\n")
        assert info.value.generator == "w"

    def test_use_before_declaration(self):
        with pytest.raises(ParseError) as info:
            parse_model("generator x\ngenerator w\nd w = x^y\ngenerator y\n")
        assert "unknown generator" in str(info.value)
        assert info.value.line == 3

    def test_undeclared_target(self):
        with pytest.raises(ParseError):
            parse_model("generator x\nd w = x^x\n")

    def test_duplicate_generator(self):
        with pytest.raises(ParseError):
            parse_model("generator x\ngenerator x\n")

    def test_two_differential_lines(self):
        text = "generator x\ngenerator y\ngenerator w\nd w = x^y\nd w = x^y\n"
        with pytest.raises(ParseError) as info:
            parse_model(text)
        assert info.value.line == 5

    def test_reserved_names(self):
        with pytest.raises(ParseError):
            parse_model("generator d\n")

    def test_unknown_statement(self):
        with pytest.raises(ParseError) as info:
            parse_model("gen x\n")
        assert info.value.line == 1

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as info:
            parse_model("generator x\ngenerator w\nd w = x @ x\n")
        assert info.value.line == 3
        assert info.value.column == 9

    def test_load_model_builtin_and_path(self, tmp_path):
        assert load_model("heisenberg") == heisenberg()
        path = tmp_path / "model.txt"
        path.write_text(HEISENBERG_MODEL_TEXT)
        assert load_model(str(path)) == heisenberg()
