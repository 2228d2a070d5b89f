"""Expression language for words in the plane and in F.

Grammar (whitespace-insensitive)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'|'·'] factor)*
    factor := atom ['^' ['-'] digits]
    atom   := digits | x | y | a | b | c | d | q | '(' expr ')'

Negative exponents are accepted on q, x, y and a only, where they mean the
power mod N. Exponents above MAX_POWER are accepted on generator symbols only,
since the exact coefficients of a compound power grow without bound. An
expression may use plane symbols (x, y) or quantum-group symbols (a, b, c, d),
not both; a scalar-only expression lives in the plane.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Union

import pyparsing as pp

from .cyclotomic import CycNum, check_order, q_pow
from .errors import ExpressionError, MixedAlgebraError, ParseError
from .hopf import FElement, FGenerator
from .qplane import PlaneElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Integer:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Symbol:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Power:
    base: Expr
    exponent: int

    def __str__(self) -> str:
        base = str(self.base)
        if not isinstance(self.base, (Integer, Symbol)):
            base = f"({base})"
        return f"{base}^{self.exponent}"


@dataclass(frozen=True)
class Product:
    factors: tuple[Expr, ...]

    def __str__(self) -> str:
        return "*".join(f"({f})" if isinstance(f, Sum) else str(f) for f in self.factors)


@dataclass(frozen=True)
class Sum:
    """Signed terms; ``terms[0]`` carries the optional leading sign."""

    terms: tuple[tuple[str, Expr], ...]

    def __str__(self) -> str:
        parts = []
        for position, (sign, term) in enumerate(self.terms):
            text = f"({term})" if isinstance(term, Sum) else str(term)
            if position == 0:
                parts.append(f"-{text}" if sign == "-" else text)
            else:
                parts.append(f" {sign} {text}")
        return "".join(parts)


Expr = Union[Integer, Symbol, Power, Product, Sum]

PLANE_SYMBOLS = frozenset("xy")
F_SYMBOLS = frozenset("abcd")
_INVERTIBLE = frozenset("qxya")
MAX_POWER = 1000


class Algebra(str, Enum):
    """Where an expression is evaluated."""

    PLANE = "plane"
    F = "F"


def _build_factor(s: str, loc: int, tokens: pp.ParseResults) -> Expr:
    if len(tokens) == 1:
        return tokens[0]
    base, exponent = tokens[0], int(tokens[1])
    if exponent < 0 and not (isinstance(base, Symbol) and base.name in _INVERTIBLE):
        raise pp.ParseFatalException(s, loc, "negative exponents are only allowed on q, x, y, a")
    return Power(base, exponent)


def _build_term(tokens: pp.ParseResults) -> Expr:
    if len(tokens) == 1:
        return tokens[0]
    return Product(tuple(tokens))


def _build_sum(tokens: pp.ParseResults) -> Expr:
    items = list(tokens)
    return Sum(tuple((items[i], items[i + 1]) for i in range(0, len(items), 2)))


@lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    expr = pp.Forward()
    integer = (
        pp.Word(pp.nums).set_name("integer").set_parse_action(lambda t: Integer(int(t[0])))
    )
    symbol = pp.Char("xyabcdq").set_name("symbol").set_parse_action(lambda t: Symbol(t[0]))
    atom = (integer | symbol | (pp.Suppress("(") + expr + pp.Suppress(")"))).set_name("atom")
    exponent = pp.Combine(pp.Opt("-") + pp.Word(pp.nums)).set_name("exponent")
    factor = (atom + pp.Opt(pp.Suppress("^") + exponent)).set_name("factor")
    factor.set_parse_action(_build_factor)
    product_op = pp.Suppress(pp.one_of("* ·"))
    term = (factor + pp.ZeroOrMore(pp.Opt(product_op) + factor)).set_name("term")
    term.set_parse_action(_build_term)
    sign = pp.one_of("+ -").set_name("sign")
    expr <<= (pp.Opt(sign, default="+") + term + pp.ZeroOrMore(sign + term)).set_parse_action(
        _build_sum
    )
    expr.set_name("expression")
    return expr


def symbols(expr: Expr) -> frozenset[str]:
    """All generator symbols occurring in ``expr``."""
    if isinstance(expr, Symbol):
        return frozenset({expr.name})
    if isinstance(expr, Integer):
        return frozenset()
    if isinstance(expr, Power):
        return symbols(expr.base)
    if isinstance(expr, Product):
        return frozenset().union(*(symbols(f) for f in expr.factors))
    return frozenset().union(*(symbols(term) for _, term in expr.terms))


def algebra_of(expr: Expr) -> Algebra:
    """Algebra an expression belongs to.

    Raises:
        MixedAlgebraError: If plane and quantum-group symbols are both present.
    """
    used = symbols(expr)
    plane, group = used & PLANE_SYMBOLS, used & F_SYMBOLS
    if plane and group:
        raise MixedAlgebraError(
            f"cannot mix plane symbols {sorted(plane)} with quantum-group symbols {sorted(group)}"
        )
    return Algebra.F if group else Algebra.PLANE


def parse(text: str) -> Expr:
    """Parse ``text`` into an expression tree.

    Raises:
        ParseError: On a syntax error, with the failing position and what was expected.
        MixedAlgebraError: If plane and quantum-group symbols are both present.
    """
    try:
        result = _grammar().parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise ParseError(
            f"syntax error at position {e.loc}: {e.msg}", position=e.loc, expected=e.msg
        ) from e
    tree: Expr = result[0]
    algebra_of(tree)
    return tree


Element = Union[PlaneElement, FElement]


def _scalar(algebra: Algebra, value: CycNum) -> Element:
    if algebra is Algebra.F:
        return FElement.scalar(value)
    return PlaneElement.scalar(value)


def _symbol(algebra: Algebra, order: int, name: str, exponent: int = 1) -> Element:
    if name == "q":
        return _scalar(algebra, q_pow(order, exponent))
    if name == "x":
        return PlaneElement.monomial(order, exponent, 0)
    if name == "y":
        return PlaneElement.monomial(order, 0, exponent)
    if name == "a":
        return FElement.monomial(order, exponent, 0, 0)
    return FElement.generator(order, FGenerator(name)) ** exponent


def _evaluate(expr: Expr, algebra: Algebra, order: int) -> Element:
    if isinstance(expr, Integer):
        return _scalar(algebra, CycNum.from_int(order, expr.value))
    if isinstance(expr, Symbol):
        return _symbol(algebra, order, expr.name)
    if isinstance(expr, Power):
        if isinstance(expr.base, Symbol):
            return _symbol(algebra, order, expr.base.name, expr.exponent)
        if expr.exponent > MAX_POWER:
            raise ExpressionError(
                f"exponent {expr.exponent} of {expr.base} exceeds {MAX_POWER}; "
                "only generator symbols take larger powers"
            )
        return _evaluate(expr.base, algebra, order) ** expr.exponent
    if isinstance(expr, Product):
        result = _scalar(algebra, CycNum.one(order))
        for factor in expr.factors:
            result = result * _evaluate(factor, algebra, order)  # type: ignore[operator]
        return result
    total = _scalar(algebra, CycNum.zero(order))
    for sign, term in expr.terms:
        value = _evaluate(term, algebra, order)
        total = total - value if sign == "-" else total + value  # type: ignore[operator]
    return total


def evaluate(expr: Expr, order: int) -> Element:
    """Normal form of ``expr`` in M_N or F at order N.

    Raises:
        OrderError: If ``order < 2``.
        MixedAlgebraError: If plane and quantum-group symbols are both present.
        ExpressionError: If a compound base is raised above MAX_POWER.
    """
    check_order(order)
    return _evaluate(expr, algebra_of(expr), order)


def eval_expression(text: str, order: int) -> str:
    """Parse, evaluate and render ``text`` at order N."""
    check_order(order)
    tree = parse(text)
    logger.debug("Evaluating %s at N=%d", tree, order)
    value = evaluate(tree, order)
    try:
        return value.render()
    except ValueError as e:
        raise ExpressionError(f"result of {text!r} is too large to print: {e}") from e
