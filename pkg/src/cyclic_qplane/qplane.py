"""The cyclic quantum plane M_N as an N^2-dimensional algebra over R_N.

Basis: ``alpha^{rs} = x^r y^s`` with ``r, s`` in ``0..N-1``. Products go through
the structure constants ``f^{(rs)(mn)}_{(kl)} = q^{-ms}`` (target
``k = r+m``, ``l = s+n`` mod N); the clock/shift matrix representation is an
independent oracle.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .cyclotomic import CycNum, check_order, power, q_pow, render_combination, to_float
from .errors import OrderMismatchError

logger = logging.getLogger(__name__)


class BasisIndex(NamedTuple):
    """Label ``(r, s)`` of the basis monomial ``x^r y^s``, reduced mod N."""

    r: int
    s: int


def basis_index(order: int, r: int, s: int) -> BasisIndex:
    return BasisIndex(r % order, s % order)


def plane_basis(order: int) -> list[BasisIndex]:
    """All N^2 basis labels in lexicographic ``(r, s)`` order."""
    check_order(order)
    return [BasisIndex(r, s) for r in range(order) for s in range(order)]


UNIT = BasisIndex(0, 0)
X = BasisIndex(1, 0)
Y = BasisIndex(0, 1)


def basis_mul(order: int, i: BasisIndex, j: BasisIndex) -> tuple[BasisIndex, CycNum]:
    """Product of two basis monomials: ``alpha^i alpha^j = q^{-ms} alpha^{(r+m)(s+n)}``."""
    return (
        BasisIndex((i.r + j.r) % order, (i.s + j.s) % order),
        q_pow(order, -j.r * i.s),
    )


def braiding_factor(order: int, i: BasisIndex, j: BasisIndex) -> CycNum:
    """``q^{rn-ms}``, so that ``alpha^i alpha^j = q^{rn-ms} alpha^j alpha^i``."""
    return q_pow(order, i.r * j.s - j.r * i.s)


def structure_f(order: int) -> list[tuple[BasisIndex, BasisIndex, BasisIndex, CycNum]]:
    """Every product structure constant as ``(i, j, k, f^{ij}_k)``; one target per pair."""
    rows = []
    for i in plane_basis(order):
        for j in plane_basis(order):
            k, value = basis_mul(order, i, j)
            rows.append((i, j, k, value))
    return rows


def structure_c(order: int) -> list[tuple[BasisIndex, BasisIndex, BasisIndex, CycNum]]:
    """Bracket structure constants ``C^{ij}_k = q^{-ms} - q^{-nr}``."""
    rows = []
    for i in plane_basis(order):
        for j in plane_basis(order):
            k, forward = basis_mul(order, i, j)
            _, backward = basis_mul(order, j, i)
            rows.append((i, j, k, forward - backward))
    return rows


@dataclass(frozen=True)
class PlaneElement:
    """Sparse element of M_N: basis label -> nonzero coefficient."""

    order: int
    terms: Mapping[BasisIndex, CycNum]

    def __post_init__(self) -> None:
        check_order(self.order)
        acc: dict[BasisIndex, CycNum] = {}
        for index, coeff in self.terms.items():
            if coeff.order != self.order:
                raise OrderMismatchError(
                    f"coefficient of order {coeff.order} in element of order {self.order}"
                )
            # labels equal mod N collapse onto one key
            key = basis_index(self.order, *index)
            acc[key] = acc[key] + coeff if key in acc else coeff
        pruned = {key: coeff for key, coeff in acc.items() if not coeff.is_zero}
        object.__setattr__(self, "terms", pruned)

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self.terms.items())))

    @classmethod
    def zero(cls, order: int) -> PlaneElement:
        return cls(order, {})

    @classmethod
    def one(cls, order: int) -> PlaneElement:
        return cls.monomial(order, 0, 0)

    @classmethod
    def monomial(
        cls, order: int, r: int, s: int, coeff: CycNum | None = None
    ) -> PlaneElement:
        """``coeff * x^r y^s`` with exponents reduced mod N."""
        value = coeff if coeff is not None else CycNum.one(order)
        return cls(order, {basis_index(order, r, s): value})

    @classmethod
    def x(cls, order: int) -> PlaneElement:
        return cls.monomial(order, 1, 0)

    @classmethod
    def y(cls, order: int) -> PlaneElement:
        return cls.monomial(order, 0, 1)

    @classmethod
    def scalar(cls, value: CycNum) -> PlaneElement:
        return cls(value.order, {UNIT: value})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, index: BasisIndex) -> CycNum:
        return self.terms.get(index, CycNum.zero(self.order))

    def items(self) -> Iterator[tuple[BasisIndex, CycNum]]:
        """Terms in lexicographic order."""
        for index in sorted(self.terms):
            yield index, self.terms[index]

    def _check(self, other: PlaneElement) -> None:
        if other.order != self.order:
            raise OrderMismatchError(
                f"cannot combine plane elements of order {self.order} and {other.order}"
            )

    def __add__(self, other: object) -> PlaneElement:
        if not isinstance(other, PlaneElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for index, coeff in other.terms.items():
            acc[index] = acc[index] + coeff if index in acc else coeff
        return PlaneElement(self.order, acc)

    def __neg__(self) -> PlaneElement:
        return PlaneElement(self.order, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other: object) -> PlaneElement:
        if not isinstance(other, PlaneElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> PlaneElement:
        if isinstance(other, (CycNum, int)):
            return PlaneElement(self.order, {i: c * other for i, c in self.terms.items()})
        if not isinstance(other, PlaneElement):
            return NotImplemented
        self._check(other)
        n = self.order
        acc: dict[BasisIndex, CycNum] = {}
        for i, ci in self.terms.items():
            for j, cj in other.terms.items():
                k, f = basis_mul(n, i, j)
                term = ci * cj * f
                acc[k] = acc[k] + term if k in acc else term
        return PlaneElement(n, acc)

    def __rmul__(self, other: object) -> PlaneElement:
        if isinstance(other, (CycNum, int)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> PlaneElement:
        if exponent < 0:
            raise ValueError("use monomial exponents mod N for inverse powers")
        return power(self, exponent, PlaneElement.one(self.order))

    def render(self, *, latex: bool = False) -> str:
        """``(c)·x^r·y^s + ...`` in lexicographic ``(r, s)`` order."""
        return render_combination(
            [(c, (("x", i.r), ("y", i.s))) for i, c in self.items()], latex=latex
        )

    def __str__(self) -> str:
        return self.render()


def basis_element(order: int, index: BasisIndex) -> PlaneElement:
    return PlaneElement.monomial(order, index.r, index.s)


def bracket(a: PlaneElement, b: PlaneElement) -> PlaneElement:
    """Commutator ``ab - ba``."""
    return a * b - b * a


def derivation(index: BasisIndex, target: PlaneElement) -> PlaneElement:
    """Inner derivation ``e_{rs}(target) = [alpha^{rs}, target]``."""
    return bracket(basis_element(target.order, index), target)


@dataclass(frozen=True)
class PlaneMatrix:
    """Square N x N matrix over R_N."""

    order: int
    entries: tuple[tuple[CycNum, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.order or any(len(row) != self.order for row in self.entries):
            raise ValueError(f"PlaneMatrix of order {self.order} must be {self.order}x{self.order}")

    @classmethod
    def from_rows(cls, order: int, rows: Iterable[Iterable[CycNum]]) -> PlaneMatrix:
        return cls(order, tuple(tuple(row) for row in rows))

    @classmethod
    def zeros(cls, order: int) -> PlaneMatrix:
        zero = CycNum.zero(order)
        return cls.from_rows(order, ([zero] * order for _ in range(order)))

    @classmethod
    def identity(cls, order: int) -> PlaneMatrix:
        zero, one = CycNum.zero(order), CycNum.one(order)
        return cls.from_rows(
            order, ([one if i == j else zero for j in range(order)] for i in range(order))
        )

    def __matmul__(self, other: PlaneMatrix) -> PlaneMatrix:
        if other.order != self.order:
            raise OrderMismatchError("matrix orders differ")
        n = self.order
        rows = []
        for i in range(n):
            acc = [CycNum.zero(n)] * n
            for k, a in enumerate(self.entries[i]):
                if a.is_zero:
                    continue
                for j, b in enumerate(other.entries[k]):
                    if not b.is_zero:
                        acc[j] = acc[j] + a * b
            rows.append(acc)
        return PlaneMatrix.from_rows(n, rows)

    def __add__(self, other: PlaneMatrix) -> PlaneMatrix:
        return PlaneMatrix.from_rows(
            self.order,
            ([a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)),
        )

    def scale(self, value: CycNum) -> PlaneMatrix:
        return PlaneMatrix.from_rows(self.order, ([value * a for a in row] for row in self.entries))

    def __pow__(self, exponent: int) -> PlaneMatrix:
        result = PlaneMatrix.identity(self.order)
        for _ in range(exponent):
            result = result @ self
        return result

    @property
    def is_diagonal(self) -> bool:
        return all(
            entry.is_zero
            for i, row in enumerate(self.entries)
            for j, entry in enumerate(row)
            if i != j
        )

    def to_complex(self) -> np.ndarray:
        """Floating evaluation at q = exp(2*pi*i/N)."""
        return np.array([[to_float(entry) for entry in row] for row in self.entries])


def shift_matrix(order: int) -> PlaneMatrix:
    """The displayed generator x: ones on the superdiagonal and in the bottom-left corner."""
    zero, one = CycNum.zero(order), CycNum.one(order)
    return PlaneMatrix.from_rows(
        order,
        ([one if j == (i + 1) % order else zero for j in range(order)] for i in range(order)),
    )


def clock_matrix(order: int) -> PlaneMatrix:
    """The displayed generator y = diag(1, q, ..., q^{N-1})."""
    zero = CycNum.zero(order)
    return PlaneMatrix.from_rows(
        order,
        ([q_pow(order, i) if i == j else zero for j in range(order)] for i in range(order)),
    )


@lru_cache(maxsize=1024)
def _basis_rep(order: int, r: int, s: int) -> PlaneMatrix:
    return (shift_matrix(order) ** r) @ (clock_matrix(order) ** s)


def rep_matrix(element: PlaneElement) -> PlaneMatrix:
    """Matrix representation ``alpha^{rs} -> X^r Y^s``, extended linearly."""
    result = PlaneMatrix.zeros(element.order)
    for index, coeff in element.items():
        result = result + _basis_rep(element.order, index.r, index.s).scale(coeff)
    return result


def representation_rank(order: int) -> int:
    """Numerical rank of the N^2 basis matrices, flattened (N^2 means faithful)."""
    stacked = np.array(
        [
            rep_matrix(basis_element(order, index)).to_complex().ravel()
            for index in plane_basis(order)
        ]
    )
    rank = int(np.linalg.matrix_rank(stacked))
    logger.debug("Representation rank for N=%d: %d", order, rank)
    return rank
