"""Z_N-graded differential calculus on Z_N inside M_N.

Grading ``|x^r y^s| = r + s mod N``, form degree ``r mod N`` and
``Omega^k = x^k Omega^0``. The differential is

    d(x^r y^s) = x alpha - q^r alpha x = (1 - q^{r-s}) x^{r+1} y^s

with the first index wrapping mod N, so ``d: Omega^k -> Omega^{k+1}``
closes cyclically.
"""

from __future__ import annotations

import logging
from typing import NewType

from .cyclotomic import CycNum, check_order, q_pow
from .errors import DegreeError, HomogeneityError
from .qplane import BasisIndex, PlaneElement, basis_element, basis_index, plane_basis

logger = logging.getLogger(__name__)

Grading = NewType("Grading", int)
FormDegree = NewType("FormDegree", int)


def grading(order: int, index: BasisIndex) -> Grading:
    return Grading((index.r + index.s) % order)


def form_degree(order: int, index: BasisIndex) -> FormDegree:
    return FormDegree(index.r % order)


def omega(order: int, k: int) -> list[BasisIndex]:
    """Basis of the k-forms ``Omega^k = {x^k, x^k y, ..., x^k y^{N-1}}``.

    Raises:
        DegreeError: If ``k`` is outside ``0..N-1``.
    """
    check_order(order)
    if not 0 <= k < order:
        raise DegreeError(f"form degree must be in 0..{order - 1}, got {k}")
    return [BasisIndex(k, s) for s in range(order)]


def grading_table(order: int) -> dict[Grading, list[BasisIndex]]:
    """Grading value -> basis labels of that grading, in block listing order."""
    check_order(order)
    return {
        Grading(g): [BasisIndex((g - j) % order, j) for j in range(order)]
        for g in range(order)
    }


def homogeneous_degree(z: PlaneElement) -> FormDegree | None:
    """Common form degree of all terms; None for zero or mixed elements."""
    degrees = {form_degree(z.order, index) for index in z.terms}
    return degrees.pop() if len(degrees) == 1 else None


def d(z: PlaneElement) -> PlaneElement:
    """The differential ``d_x``, basis-wise closed form extended linearly."""
    n = z.order
    result = PlaneElement.zero(n)
    for index, coeff in z.items():
        factor = CycNum.one(n) - q_pow(n, index.r - index.s)
        result = result + PlaneElement.monomial(n, index.r + 1, index.s, coeff * factor)
    return result


def q_commutator(z: PlaneElement, k: int) -> PlaneElement:
    """``[x, z]_q = x z - q^k z x``."""
    x = PlaneElement.x(z.order)
    return x * z - (z * x) * q_pow(z.order, k)


def d_power(z: PlaneElement, m: int) -> PlaneElement:
    """m-fold application of ``d``.

    Raises:
        ValueError: If ``m < 1``.
    """
    if m < 1:
        raise ValueError(f"power of d must be positive, got {m}")
    for _ in range(m):
        z = d(z)
    return z


def d_power_closed_form(order: int, index: BasisIndex, m: int) -> PlaneElement:
    """``d^m(x^r y^s) = prod_{j<m} (1 - q^{r+j-s}) x^{r+m} y^s``."""
    coeff = CycNum.one(order)
    for j in range(m):
        coeff = coeff * (CycNum.one(order) - q_pow(order, index.r + j - index.s))
    return PlaneElement.monomial(order, index.r + m, index.s, coeff)


def d_nested(z: PlaneElement, m: int) -> PlaneElement:
    """``[x, [x, ..., [x, z]_q ...]_q]_q`` with the degree raised at each step.

    Raises:
        HomogeneityError: If ``z`` is not homogeneous in form degree.
    """
    if z.is_zero:
        return z
    k = homogeneous_degree(z)
    if k is None:
        raise HomogeneityError("nested q-commutators need a homogeneous form")
    for step in range(m):
        z = q_commutator(z, k + step)
    return z


def leibniz_defect(p: PlaneElement, w: PlaneElement) -> PlaneElement:
    """``d(pw) - d(p) w - q^k p d(w)`` for p homogeneous of form degree k.

    Raises:
        HomogeneityError: If ``p`` is nonzero and not homogeneous.
    """
    if p.is_zero:
        return p
    k = homogeneous_degree(p)
    if k is None:
        raise HomogeneityError(f"{p.render()} is not homogeneous in form degree")
    return d(p * w) - d(p) * w - (p * d(w)) * q_pow(p.order, k)


def zero_form_witness(order: int) -> str | None:
    """On 0-forms ``d(y^m) = [x, y^m] = (1 - q^{-m}) x y^m``; witness or None."""
    x = PlaneElement.x(order)
    for m in range(order):
        ym = PlaneElement.monomial(order, 0, m)
        expected = PlaneElement.monomial(order, 1, m, CycNum.one(order) - q_pow(order, -m))
        for label, value in (("d", d(ym)), ("[x, .]", x * ym - ym * x)):
            if value != expected:
                return f"N={order}: {label}(y^{m}) = {value.render()} != {expected.render()}"
    return None


# N = 3 differential table: basis label -> (k, target) for d = (1 - q^k) target, None for d = 0.
N3_DIFFERENTIAL_TABLE: dict[BasisIndex, tuple[int, BasisIndex] | None] = {
    BasisIndex(0, 0): None,
    BasisIndex(0, 1): (2, BasisIndex(1, 1)),
    BasisIndex(0, 2): (1, BasisIndex(1, 2)),
    BasisIndex(1, 0): (1, BasisIndex(2, 0)),
    BasisIndex(1, 1): None,
    BasisIndex(1, 2): (2, BasisIndex(2, 2)),
    BasisIndex(2, 0): (2, BasisIndex(0, 0)),
    BasisIndex(2, 1): (1, BasisIndex(0, 1)),
    BasisIndex(2, 2): None,
}

# Grading triples listed for N = 3.
N3_GRADING_TRIPLES: dict[int, frozenset[BasisIndex]] = {
    0: frozenset({BasisIndex(0, 0), BasisIndex(1, 2), BasisIndex(2, 1)}),
    1: frozenset({BasisIndex(1, 0), BasisIndex(0, 1), BasisIndex(2, 2)}),
    2: frozenset({BasisIndex(2, 0), BasisIndex(0, 2), BasisIndex(1, 1)}),
}


def golden_table_witness(order: int) -> str | None:
    """Compare ``d`` at ``order`` with the literal N = 3 table; witness or None."""
    for source, entry in N3_DIFFERENTIAL_TABLE.items():
        z = basis_element(order, basis_index(order, *source))
        if entry is None:
            expected = PlaneElement.zero(order)
        else:
            k, target = entry
            expected = PlaneElement.monomial(
                order, target.r, target.s, CycNum.one(order) - q_pow(order, k)
            )
        actual = d(z)
        if actual != expected:
            return (
                f"N={order}: d({z.render()}) = {actual.render()}, "
                f"table gives {expected.render()}"
            )
    return None


def grading_triples_witness(order: int) -> str | None:
    """Compare ``grading_table`` with the literal N = 3 triples; witness or None."""
    table = grading_table(order)
    for g, triple in N3_GRADING_TRIPLES.items():
        listed = frozenset(basis_index(order, *index) for index in triple)
        computed = frozenset(table.get(Grading(g), []))
        if listed != computed:
            return f"N={order}: grading {g} holds {len(computed)} elements, listing differs"
    return None


def nilpotency_witness(order: int) -> str | None:
    """First basis element with ``d^N != 0``; None when d^N vanishes on the basis."""
    for index in plane_basis(order):
        image = d_power(basis_element(order, index), order)
        if not image.is_zero:
            return f"N={order}: d^{order}(x^{index.r}·y^{index.s}) = {image.render()}"
    return None
