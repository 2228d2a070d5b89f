"""Tests for the expression parser and evaluator."""

from __future__ import annotations

import pytest

from cyclic_qplane.errors import ExpressionError, MixedAlgebraError, OrderError, ParseError
from cyclic_qplane.expression import (
    MAX_POWER,
    Algebra,
    Integer,
    Power,
    Product,
    Sum,
    Symbol,
    algebra_of,
    eval_expression,
    evaluate,
    parse,
)
from cyclic_qplane.hopf import FElement
from cyclic_qplane.qplane import PlaneElement

GRAMMAR_NAMES = (
    "expression",
    "term",
    "factor",
    "atom",
    "integer",
    "symbol",
    "exponent",
    "end of text",
    "')'",
)

CORPUS = [
    "1",
    "0",
    "7",
    "q",
    "q^2",
    "q^-1",
    "-q",
    "2 - q",
    "x",
    "y",
    "x^0",
    "x^3",
    "y^4",
    "x^-1",
    "y^-2",
    "x*y",
    "y*x",
    "x*y - q*y*x",
    "y x",
    "x y^2",
    "x^2 y x",
    "(x + y)^2",
    "(x + y)^3",
    "(x - y)*(x + y)",
    "3x + 2y",
    "q*x + q^2*y",
    "(1 + q)*x*y",
    "x^-1 * y^-1",
    "-(x*y)",
    "x*(y - x)*y",
    "(1 - q)^2 * x",
    "y^2 x^2 - x^2 y^2",
    "x + y + 1",
    "(x*y)^2",
    "2*(x + q*y) - x",
    "a",
    "b",
    "c",
    "d",
    "b*a",
    "a*b",
    "c*a",
    "b*c - c*b",
    "a*d - q*b*c",
    "d*a - q^-1*b*c",
    "a^-1",
    "a^3",
    "(a + b)^2",
    "d^2",
    "b^2 c + q a",
]


class TestParse:
    """Tests for parse."""

    def test_tree(self) -> None:
        """Test the shape of a simple tree."""
        tree = parse("x*y - q*y*x")
        assert isinstance(tree, Sum)
        assert tree.terms[0] == ("+", Product((Symbol("x"), Symbol("y"))))
        assert tree.terms[1] == ("-", Product((Symbol("q"), Symbol("y"), Symbol("x"))))

    def test_power(self) -> None:
        """Test exponent parsing, including negative exponents."""
        assert parse("x^-1").terms[0][1] == Power(Symbol("x"), -1)
        assert parse("2^3").terms[0][1] == Power(Integer(2), 3)

    def test_juxtaposition_and_middle_dot(self) -> None:
        """Test that 'xy', 'x*y' and 'x·y' parse alike."""
        assert parse("xy") == parse("x*y") == parse("x·y")

    @pytest.mark.parametrize("text", CORPUS)
    def test_print_parse_round_trip(self, text: str) -> None:
        """Test parse(print(parse(e))) = parse(e)."""
        tree = parse(text)
        assert parse(str(tree)) == tree

    @pytest.mark.parametrize(
        ("text", "position"),
        [("x +", 3), ("(x", 2), ("", 0), ("x ^ y", 2)],
    )
    def test_syntax_error_position(self, text: str, position: int) -> None:
        """Test syntax errors report where parsing stopped."""
        with pytest.raises(ParseError) as exc_info:
            parse(text)
        assert exc_info.value.position is not None
        assert exc_info.value.position <= position
        assert exc_info.value.expected

    @pytest.mark.parametrize("text", ["", "--x", "x + ", "(x"])
    def test_expected_names_grammar_element(self, text: str) -> None:
        """Test the expectation is a short grammar name, not the whole grammar."""
        with pytest.raises(ParseError) as exc_info:
            parse(text)
        expected = exc_info.value.expected
        assert expected is not None
        assert len(expected) < 80
        assert any(name in expected for name in GRAMMAR_NAMES)

    def test_unknown_symbol(self) -> None:
        """Test that symbols outside x, y, a, b, c, d, q are rejected."""
        with pytest.raises(ParseError):
            parse("x*z")

    def test_negative_exponent_restricted(self) -> None:
        """Test that b, c, d and integers take no negative exponent."""
        for text in ("b^-1", "d^-2", "2^-1", "(x + y)^-1"):
            with pytest.raises(ParseError):
                parse(text)

    def test_mixed_algebra(self) -> None:
        """Test that x*a is rejected."""
        with pytest.raises(MixedAlgebraError):
            parse("x*a")

    def test_algebra_of(self) -> None:
        """Test scalar-only expressions live in the plane."""
        assert algebra_of(parse("q^2 + 1")) is Algebra.PLANE
        assert algebra_of(parse("b*c")) is Algebra.F


class TestEvaluate:
    """Tests for evaluation to normal form."""

    def test_defining_relation(self) -> None:
        """Test xy - q yx = 0."""
        assert eval_expression("x*y - q*y*x", 3) == "0"

    def test_unit(self) -> None:
        """Test x^0 and x^N evaluate to the unit."""
        assert eval_expression("x^0", 3) == "1"
        assert eval_expression("x^3", 3) == "1"
        assert eval_expression("q^3", 3) == "1"

    def test_yx(self) -> None:
        """Test yx = q^-1 xy, with q^-1 = q^2 = -1 - q at N = 3."""
        assert eval_expression("y*x", 3) == "(-1 - q)·x^1·y^1"

    def test_ba(self) -> None:
        """Test ba = q^-1 ab."""
        assert eval_expression("b*a", 3) == "(-1 - q)·a^1·b^1"

    def test_inverse_powers(self) -> None:
        """Test x^-1 = x^{N-1} and a^-1 = a^{N-1}."""
        assert eval_expression("x^-1", 3) == "x^2"
        assert eval_expression("a^-1", 4) == "a^3"

    def test_scalars(self) -> None:
        """Test integer and negated terms."""
        assert eval_expression("2x", 3) == "(2)·x^1"
        assert eval_expression("-x", 3) == "(-1)·x^1"
        assert eval_expression("3", 3) == "(3)"

    def test_determinant(self) -> None:
        """Test both q-determinants evaluate to 1 with d expanded."""
        assert eval_expression("a*d - q*b*c", 5) == "1"
        assert eval_expression("d*a - q^-1*b*c", 5) == "1"
        assert eval_expression("d", 3) == "a^2 + (q)·a^2·b^1·c^1"

    def test_truncation(self) -> None:
        """Test b^N = 0."""
        assert eval_expression("b^3", 3) == "0"

    def test_large_generator_powers(self) -> None:
        """Test huge exponents on generators reduce instead of multiplying out."""
        assert eval_expression("b^1000000000", 3) == "0"
        assert eval_expression("x^1000000000", 3) == "x^1"
        assert eval_expression("q^1000000001", 5) == eval_expression("q^1", 5)
        assert eval_expression("d^100000000", 3) == eval_expression("d", 3)

    def test_large_compound_power_rejected(self) -> None:
        """Test a compound base above MAX_POWER is refused."""
        with pytest.raises(ExpressionError, match="exceeds"):
            eval_expression("(x + y)^100000000", 3)
        assert eval_expression(f"(x*y)^{MAX_POWER}", 3) == eval_expression(
            f"(x*y)^{MAX_POWER % 3}", 3
        )

    def test_element_types(self) -> None:
        """Test plane and F expressions evaluate to their own algebras."""
        assert isinstance(evaluate(parse("x + 1"), 3), PlaneElement)
        assert isinstance(evaluate(parse("a + 1"), 3), FElement)

    def test_bad_order(self) -> None:
        """Test that N < 2 is rejected."""
        with pytest.raises(OrderError):
            eval_expression("x", 1)

    @pytest.mark.parametrize("order", [2, 3, 4, 5])
    @pytest.mark.parametrize("text", CORPUS)
    def test_rendering_round_trip(self, text: str, order: int) -> None:
        """Test the rendered normal form re-parses to itself."""
        rendered = eval_expression(text, order)
        assert eval_expression(rendered, order) == rendered
