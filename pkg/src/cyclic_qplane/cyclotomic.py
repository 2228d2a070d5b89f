"""Exact arithmetic in Z[q] / (1 + q + ... + q^(N-1)).

Every scalar of the library is a :class:`CycNum`. Elements are stored in the
canonical basis ``1, q, ..., q^(N-2)``; the single rewrite rule is
``q^(N-1) -> -(1 + q + ... + q^(N-2))``, applied after exponents are reduced
mod N (the relation implies ``q^N = 1``). Coefficients are Python integers, so
there is no overflow.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Protocol, TypeVar

import numpy as np

from .errors import OrderError, OrderMismatchError


class _Multiplicative(Protocol):
    @property
    def is_zero(self) -> bool: ...

    def __mul__(self, other: Any) -> Any: ...


M = TypeVar("M", bound=_Multiplicative)


def power(base: M, exponent: int, one: M) -> M:
    """``base ** exponent`` by repeated squaring, stopping once a square vanishes.

    Raises:
        ValueError: If ``exponent < 0``.
    """
    if exponent < 0:
        raise ValueError(f"exponent must be non-negative, got {exponent}")
    result = one
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if not exponent:
            break
        base = base * base
        if base.is_zero:
            return base
    return result


def check_order(order: int) -> int:
    """Validate a root-of-unity order.

    Raises:
        OrderError: If ``order < 2`` (``q != 1`` needs at least N = 2).
    """
    if order < 2:
        raise OrderError(f"order N must be >= 2, got {order}")
    return order


@dataclass(frozen=True, slots=True)
class CycNum:
    """Element of R_N = Z[q] / (1 + q + ... + q^(N-1)) in canonical form."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        check_order(self.order)
        if len(self.coeffs) != self.order - 1:
            raise ValueError(
                f"CycNum of order {self.order} needs {self.order - 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_powers(cls, order: int, values: Sequence[int]) -> CycNum:
        """Reduce an arbitrary coefficient vector (index = exponent of q)."""
        check_order(order)
        acc = [0] * order
        for k, c in enumerate(values):
            acc[k % order] += c
        top = acc[order - 1]
        return cls(order, tuple(c - top for c in acc[: order - 1]))

    @classmethod
    def zero(cls, order: int) -> CycNum:
        return cls(order, (0,) * (order - 1))

    @classmethod
    def one(cls, order: int) -> CycNum:
        return cls.from_int(order, 1)

    @classmethod
    def from_int(cls, order: int, value: int) -> CycNum:
        check_order(order)
        return cls(order, (value,) + (0,) * (order - 2))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other: object) -> CycNum | None:
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot combine order {self.order} with order {other.order}"
                )
            return other
        if isinstance(other, int):
            return CycNum.from_int(self.order, other)
        return None

    def __add__(self, other: object) -> CycNum:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CycNum(self.order, tuple(a + b for a, b in zip(self.coeffs, rhs.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> CycNum:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CycNum(self.order, tuple(a - b for a, b in zip(self.coeffs, rhs.coeffs)))

    def __rsub__(self, other: object) -> CycNum:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> CycNum:
        if isinstance(other, int):
            return CycNum(self.order, tuple(c * other for c in self.coeffs))
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = self.order
        acc = [0] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(rhs.coeffs):
                if b:
                    acc[(i + j) % n] += a * b
        top = acc[n - 1]
        return CycNum(n, tuple(c - top for c in acc[: n - 1]))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycNum:
        if exponent < 0:
            raise ValueError("negative powers are only defined for powers of q; use q_pow")
        return power(self, exponent, CycNum.one(self.order))

    def render(self) -> str:
        """Canonical text rendering, ascending powers (``-1 - q``)."""
        return _render_terms(self.coeffs, lambda k: "q" if k == 1 else f"q^{k}")

    def render_latex(self) -> str:
        return _render_terms(self.coeffs, lambda k: "q" if k == 1 else f"q^{{{k}}}")

    def __str__(self) -> str:
        return self.render()


def _render_terms(coeffs: Sequence[int], power: Callable[[int], str]) -> str:
    parts: list[str] = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mono = power(k)
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) if parts else "0"


@lru_cache(maxsize=4096)
def q_pow(order: int, n: int) -> CycNum:
    """Canonical form of ``q^(n mod N)``; ``n`` may be negative.

    Raises:
        OrderError: If ``order < 2``.
    """
    check_order(order)
    values = [0] * order
    values[n % order] = 1
    return CycNum.from_powers(order, values)


def q_integer(order: int, s: int, step: int) -> CycNum:
    """Telescoped q-integer ``sum_{j<s} q^(step*j)``.

    This is the ratio ``(1 - q^(step*s)) / (1 - q^step)`` written without a
    division, so it is defined at every N, including N = 2 where the ratio
    reads 0/0.
    """
    check_order(order)
    if s < 0:
        raise ValueError(f"q-integer length must be non-negative, got {s}")
    values = [0] * order
    for j in range(s):
        values[(step * j) % order] += 1
    return CycNum.from_powers(order, values)


def to_float(value: CycNum) -> complex:
    """Evaluate at q = exp(2*pi*i/N). For display and cross-checks only."""
    n = value.order
    roots = np.exp(2j * np.pi * np.arange(n - 1) / n)
    return complex(np.dot(np.asarray(value.coeffs, dtype=float), roots))


def render_combination(
    terms: Sequence[tuple[CycNum, Sequence[tuple[str, int]]]],
    *,
    latex: bool = False,
) -> str:
    """Render ``sum c * monomial`` with the shared coefficient conventions.

    Each monomial is a sequence of ``(symbol, exponent)`` pairs; zero exponents
    are skipped. A unit coefficient is dropped on non-trivial monomials and
    the empty monomial with coefficient 1 renders as ``1``.
    """
    rendered: list[str] = []
    for coeff, factors in terms:
        if latex:
            mono = " ".join(f"{sym}^{{{exp}}}" for sym, exp in factors if exp)
            scalar = f"({coeff.render_latex()})"
            joiner = " "
        else:
            mono = "·".join(f"{sym}^{exp}" for sym, exp in factors if exp)
            scalar = f"({coeff.render()})"
            joiner = "·"
        is_one = coeff == CycNum.one(coeff.order)
        if not mono:
            rendered.append("1" if is_one else scalar)
        else:
            rendered.append(mono if is_one else f"{scalar}{joiner}{mono}")
    return " + ".join(rendered) if rendered else "0"
