"""The quotiented quantum group F, its coactions on M_N and the dual action.

F is generated by a, b, c with ``ab = q ba``, ``ac = q ca``, ``bc = cb``,
``a^N = 1`` and ``b^N = c^N = 0``; the fourth matrix entry is eliminated through
``d = a^{N-1}(1 + q bc)``. Normal form is ``a^alpha b^beta c^gamma`` with
``0 <= alpha, beta, gamma < N``, so F has dimension N^3.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .cyclotomic import CycNum, check_order, power, q_integer, q_pow, render_combination
from .errors import NotGeneratorError, OrderMismatchError
from .qplane import UNIT, X, Y, BasisIndex, PlaneElement, basis_element, plane_basis

logger = logging.getLogger(__name__)


class FMonomial(NamedTuple):
    """Exponents of the normal-ordered monomial ``a^alpha b^beta c^gamma``."""

    alpha: int
    beta: int
    gamma: int


F_UNIT = FMonomial(0, 0, 0)


class FGenerator(str, Enum):
    """Generators of F that the pairing is defined on (plus the unit)."""

    ONE = "1"
    A = "a"
    B = "b"
    C = "c"
    D = "d"


class DualGenerator(str, Enum):
    """Generators of the dual algebra H."""

    H = "H"
    H_INV = "H^-1"
    X_PLUS = "X+"
    X_MINUS = "X-"


def f_monomial_mul(order: int, u: FMonomial, v: FMonomial) -> tuple[FMonomial, int] | None:
    """Normal-ordered product of two monomials as ``(monomial, exponent of q)``.

    Moving ``a^{alpha'}`` left past ``b^beta c^gamma`` costs ``q^{-alpha'(beta+gamma)}``;
    b and c commute. Returns None when a b- or c-exponent reaches N.
    """
    beta = u.beta + v.beta
    gamma = u.gamma + v.gamma
    if beta >= order or gamma >= order:
        return None
    return FMonomial((u.alpha + v.alpha) % order, beta, gamma), -v.alpha * (u.beta + u.gamma)


def f_basis(order: int) -> list[FMonomial]:
    """Normal-form basis of F (N^3 monomials)."""
    check_order(order)
    return [
        FMonomial(alpha, beta, gamma)
        for alpha in range(order)
        for beta in range(order)
        for gamma in range(order)
    ]


@dataclass(frozen=True)
class FElement:
    """Sparse normal-form element of F."""

    order: int
    terms: Mapping[FMonomial, CycNum]

    def __post_init__(self) -> None:
        check_order(self.order)
        acc: dict[FMonomial, CycNum] = {}
        for mono, coeff in self.terms.items():
            if coeff.order != self.order:
                raise OrderMismatchError(
                    f"coefficient of order {coeff.order} in element of order {self.order}"
                )
            alpha, beta, gamma = mono
            if beta >= self.order or gamma >= self.order:
                continue
            key = FMonomial(alpha % self.order, beta, gamma)
            acc[key] = acc[key] + coeff if key in acc else coeff
        pruned = {key: coeff for key, coeff in acc.items() if not coeff.is_zero}
        object.__setattr__(self, "terms", pruned)

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self.terms.items())))

    @classmethod
    def zero(cls, order: int) -> FElement:
        return cls(order, {})

    @classmethod
    def one(cls, order: int) -> FElement:
        return cls.monomial(order, 0, 0, 0)

    @classmethod
    def monomial(
        cls, order: int, alpha: int, beta: int, gamma: int, coeff: CycNum | None = None
    ) -> FElement:
        value = coeff if coeff is not None else CycNum.one(order)
        return cls(order, {FMonomial(alpha, beta, gamma): value})

    @classmethod
    def scalar(cls, value: CycNum) -> FElement:
        return cls(value.order, {F_UNIT: value})

    @classmethod
    def generator(cls, order: int, gen: FGenerator) -> FElement:
        """The element of F named by ``gen``; d is returned expanded."""
        if gen is FGenerator.D:
            return expand_d(order)
        exponents = {
            FGenerator.ONE: (0, 0, 0),
            FGenerator.A: (1, 0, 0),
            FGenerator.B: (0, 1, 0),
            FGenerator.C: (0, 0, 1),
        }[gen]
        return cls.monomial(order, *exponents)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[tuple[FMonomial, CycNum]]:
        for mono in sorted(self.terms):
            yield mono, self.terms[mono]

    def _check(self, other: FElement) -> None:
        if other.order != self.order:
            raise OrderMismatchError(
                f"cannot combine elements of F of order {self.order} and {other.order}"
            )

    def __add__(self, other: object) -> FElement:
        if not isinstance(other, FElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc[mono] = acc[mono] + coeff if mono in acc else coeff
        return FElement(self.order, acc)

    def __neg__(self) -> FElement:
        return FElement(self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: object) -> FElement:
        if not isinstance(other, FElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> FElement:
        if isinstance(other, (CycNum, int)):
            return FElement(self.order, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, FElement):
            return NotImplemented
        self._check(other)
        n = self.order
        acc: dict[FMonomial, CycNum] = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                product = f_monomial_mul(n, u, v)
                if product is None:
                    continue
                mono, exponent = product
                term = cu * cv * q_pow(n, exponent)
                acc[mono] = acc[mono] + term if mono in acc else term
        return FElement(n, acc)

    def __rmul__(self, other: object) -> FElement:
        if isinstance(other, (CycNum, int)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> FElement:
        if exponent < 0:
            raise ValueError("negative powers are only defined for a; use exponents mod N")
        return power(self, exponent, FElement.one(self.order))

    def render(self, *, latex: bool = False) -> str:
        """``(c)·a^alpha·b^beta·c^gamma + ...`` in lexicographic exponent order."""
        return render_combination(
            [(c, (("a", m.alpha), ("b", m.beta), ("c", m.gamma))) for m, c in self.items()],
            latex=latex,
        )

    def __str__(self) -> str:
        return self.render()


def f_mul(u: FElement, v: FElement) -> FElement:
    """Normal-ordered product in F."""
    return u * v


@lru_cache(maxsize=64)
def expand_d(order: int) -> FElement:
    """``d = a^{N-1}(1 + q bc)``, obtained from ``ad = 1 + q bc`` and ``a^N = 1``."""
    check_order(order)
    return FElement(
        order,
        {
            FMonomial(order - 1, 0, 0): CycNum.one(order),
            FMonomial(order - 1, 1, 1): q_pow(order, 1),
        },
    )


def qdet(order: int, *, left: bool = True) -> FElement:
    """q-determinant ``ad - q bc`` (``left``) or ``da - q^{-1} bc``."""
    a = FElement.generator(order, FGenerator.A)
    bc = FElement.monomial(order, 0, 1, 1)
    d = expand_d(order)
    if left:
        return a * d - bc * q_pow(order, 1)
    return d * a - bc * q_pow(order, -1)


def qdet_check(order: int) -> bool:
    """Both forms of the q-determinant equal 1 once d is expanded."""
    one = FElement.one(order)
    return qdet(order, left=True) == one and qdet(order, left=False) == one


def is_central(element: FElement) -> bool:
    """Whether ``element`` commutes with the generators a, b, c."""
    for gen in (FGenerator.A, FGenerator.B, FGenerator.C):
        g = FElement.generator(element.order, gen)
        if element * g != g * element:
            return False
    return True


_WORD_RANK = {"a": 0, "b": 1, "c": 2}
_SWAP_EXPONENT = {("b", "a"): -1, ("c", "a"): -1, ("c", "b"): 0}


def rewrite_word(order: int, word: str, *, from_right: bool = False) -> FElement:
    """Normalize a word in a, b, c by adjacent swaps.

    Swaps the leftmost (or rightmost) out-of-order pair until the word is
    sorted, using ``ba -> q^{-1} ab``, ``ca -> q^{-1} ac`` and ``cb -> bc``, then
    applies ``a^N = 1`` and ``b^N = c^N = 0``.
    """
    check_order(order)
    letters = list(word)
    unknown = set(letters) - set(_WORD_RANK)
    if unknown:
        raise ValueError(f"words may only contain a, b, c; got {sorted(unknown)}")
    exponent = 0
    while True:
        inversions = [
            i
            for i in range(len(letters) - 1)
            if _WORD_RANK[letters[i]] > _WORD_RANK[letters[i + 1]]
        ]
        if not inversions:
            break
        i = inversions[-1] if from_right else inversions[0]
        exponent += _SWAP_EXPONENT[(letters[i], letters[i + 1])]
        letters[i], letters[i + 1] = letters[i + 1], letters[i]
    return FElement.monomial(
        order,
        letters.count("a"),
        letters.count("b"),
        letters.count("c"),
        q_pow(order, exponent),
    )


class Side(str, Enum):
    """Which tensor factor carries the quantum group."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class TensorElement:
    """Element of F (x) M_N (left) or M_N (x) F (right).

    Terms are keyed ``(F monomial, plane basis label)`` for both sides; the side
    only decides the printed factor order. Multiplication is factor-wise:
    ``(u (x) z)(u' (x) z') = uu' (x) zz'``.
    """

    order: int
    side: Side
    terms: Mapping[tuple[FMonomial, BasisIndex], CycNum]

    def __post_init__(self) -> None:
        pruned = {
            key: coeff
            for key, coeff in self.terms.items()
            if not coeff.is_zero and key[0].beta < self.order and key[0].gamma < self.order
        }
        object.__setattr__(self, "terms", pruned)

    def __hash__(self) -> int:
        return hash((self.order, self.side, frozenset(self.terms.items())))

    @classmethod
    def one(cls, order: int, side: Side) -> TensorElement:
        return cls(order, side, {(F_UNIT, UNIT): CycNum.one(order)})

    @classmethod
    def pure(cls, side: Side, f: FElement, z: PlaneElement) -> TensorElement:
        """Simple tensor of an element of F with an element of the plane."""
        if f.order != z.order:
            raise OrderMismatchError("tensor factors have different orders")
        terms: dict[tuple[FMonomial, BasisIndex], CycNum] = {}
        for mono, cf in f.terms.items():
            for index, cz in z.terms.items():
                terms[(mono, index)] = cf * cz
        return cls(f.order, side, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: TensorElement) -> None:
        if other.order != self.order or other.side is not self.side:
            raise OrderMismatchError("tensor elements differ in order or side")

    def __add__(self, other: object) -> TensorElement:
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for key, coeff in other.terms.items():
            acc[key] = acc[key] + coeff if key in acc else coeff
        return TensorElement(self.order, self.side, acc)

    def __neg__(self) -> TensorElement:
        return TensorElement(self.order, self.side, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: object) -> TensorElement:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> TensorElement:
        if isinstance(other, (CycNum, int)):
            return TensorElement(
                self.order, self.side, {k: c * other for k, c in self.terms.items()}
            )
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        n = self.order
        acc: dict[tuple[FMonomial, BasisIndex], CycNum] = {}
        for (u, i), cu in self.terms.items():
            for (v, j), cv in other.terms.items():
                product = f_monomial_mul(n, u, v)
                if product is None:
                    continue
                mono, exponent = product
                index = BasisIndex((i.r + j.r) % n, (i.s + j.s) % n)
                term = cu * cv * q_pow(n, exponent - j.r * i.s)
                key = (mono, index)
                acc[key] = acc[key] + term if key in acc else term
        return TensorElement(n, self.side, acc)

    def __rmul__(self, other: object) -> TensorElement:
        if isinstance(other, (CycNum, int)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> TensorElement:
        return power(self, exponent, TensorElement.one(self.order, self.side))

    def render(self) -> str:
        parts = []
        for (mono, index), coeff in sorted(self.terms.items()):
            f_text = FElement(self.order, {mono: CycNum.one(self.order)}).render()
            z_text = PlaneElement(self.order, {index: CycNum.one(self.order)}).render()
            pair = f"{f_text} ⊗ {z_text}" if self.side is Side.LEFT else f"{z_text} ⊗ {f_text}"
            parts.append(f"({coeff.render()})·[{pair}]")
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.render()


# delta_L(x) = a(x)x + b(x)y, delta_L(y) = c(x)x + d(x)y
_LEFT_IMAGES: dict[BasisIndex, tuple[tuple[FGenerator, BasisIndex], ...]] = {
    X: ((FGenerator.A, X), (FGenerator.B, Y)),
    Y: ((FGenerator.C, X), (FGenerator.D, Y)),
}


def coact_right_generators(index: BasisIndex) -> tuple[tuple[BasisIndex, FGenerator], ...]:
    """Right coaction of 1, x or y in generator form, ``sum z_i (x) u_i``.

    ``delta_R(x) = x (x) a + y (x) c`` and ``delta_R(y) = x (x) b + y (x) d``.

    Raises:
        NotGeneratorError: For any other basis label.
    """
    if index == UNIT:
        return ((UNIT, FGenerator.ONE),)
    if index == X:
        return ((X, FGenerator.A), (Y, FGenerator.C))
    if index == Y:
        return ((X, FGenerator.B), (Y, FGenerator.D))
    raise NotGeneratorError(f"x^{index.r}·y^{index.s} is not one of 1, x, y")


@lru_cache(maxsize=256)
def _coact_generator(order: int, side: Side, index: BasisIndex) -> TensorElement:
    if side is Side.LEFT:
        pairs = [(gen, target) for gen, target in _LEFT_IMAGES[index]]
    else:
        pairs = [(gen, target) for target, gen in coact_right_generators(index)]
    result = TensorElement(order, side, {})
    for gen, target in pairs:
        result = result + TensorElement.pure(
            side, FElement.generator(order, gen), basis_element(order, target)
        )
    return result


@lru_cache(maxsize=4096)
def _coact_basis(order: int, side: Side, r: int, s: int) -> TensorElement:
    return _coact_generator(order, side, X) ** r * _coact_generator(order, side, Y) ** s


def _coact(side: Side, z: PlaneElement) -> TensorElement:
    result = TensorElement(z.order, side, {})
    for index, coeff in z.items():
        result = result + _coact_basis(z.order, side, index.r, index.s) * coeff
    return result


def coact_left(z: PlaneElement) -> TensorElement:
    """Left coaction ``M_N -> F (x) M_N``, extended as an algebra map."""
    return _coact(Side.LEFT, z)


def coact_right(z: PlaneElement) -> TensorElement:
    """Right coaction ``M_N -> M_N (x) F``, extended as an algebra map."""
    return _coact(Side.RIGHT, z)


# Exponent of q for each nonzero pairing entry; the unit row holds the counit values.
_PAIRING: dict[tuple[DualGenerator, FGenerator], int] = {
    (DualGenerator.H, FGenerator.ONE): 0,
    (DualGenerator.H, FGenerator.A): 1,
    (DualGenerator.H, FGenerator.D): -1,
    (DualGenerator.H_INV, FGenerator.ONE): 0,
    (DualGenerator.H_INV, FGenerator.A): -1,
    (DualGenerator.H_INV, FGenerator.D): 1,
    (DualGenerator.X_PLUS, FGenerator.B): 0,
    (DualGenerator.X_MINUS, FGenerator.C): 0,
}

# Literal table: q^2 for these two entries, equal to q^-1 only at N = 3.
_LITERAL_PAIRING = {
    **_PAIRING,
    (DualGenerator.H, FGenerator.D): 2,
    (DualGenerator.H_INV, FGenerator.A): 2,
}


def pairing(
    order: int, dual: DualGenerator, gen: FGenerator, *, literal: bool = False
) -> CycNum:
    """Pairing ``<dual, gen>`` between generators of H and F.

    With ``literal=True`` the literal q^2 entries are used instead of q^-1.
    """
    table = _LITERAL_PAIRING if literal else _PAIRING
    exponent = table.get((dual, gen))
    if exponent is None:
        return CycNum.zero(order)
    return q_pow(order, exponent)


def act_from_coaction(
    dual: DualGenerator, z: PlaneElement, *, literal: bool = False
) -> PlaneElement:
    """Left action ``X(z) = (Id (x) <X, .>) delta_R(z)`` on span{1, x, y}.

    Raises:
        NotGeneratorError: If ``z`` has a term outside 1, x, y.
    """
    n = z.order
    result = PlaneElement.zero(n)
    for index, coeff in z.items():
        for target, gen in coact_right_generators(index):
            weight = pairing(n, dual, gen, literal=literal)
            result = result + basis_element(n, target) * (coeff * weight)
    return result


PlaneOperator = Callable[[PlaneElement], PlaneElement]


def _basiswise(
    z: PlaneElement, image: Callable[[int, BasisIndex], tuple[CycNum, int, int]]
) -> PlaneElement:
    n = z.order
    result = PlaneElement.zero(n)
    for index, coeff in z.items():
        factor, r, s = image(n, index)
        result = result + PlaneElement.monomial(n, r, s, coeff * factor)
    return result


def act_H(z: PlaneElement) -> PlaneElement:
    """``H[x^r y^s] = q^{r-s} x^r y^s``."""
    return _basiswise(z, lambda n, i: (q_pow(n, i.r - i.s), i.r, i.s))


def act_H_inverse(z: PlaneElement) -> PlaneElement:
    """``H^{-1}[x^r y^s] = q^{s-r} x^r y^s``."""
    return _basiswise(z, lambda n, i: (q_pow(n, i.s - i.r), i.r, i.s))


def act_Xp(z: PlaneElement) -> PlaneElement:
    """``X+[x^r y^s] = q^r [s]_{q^-2} x^{r+1} y^{s-1}``."""
    return _basiswise(
        z, lambda n, i: (q_pow(n, i.r) * q_integer(n, i.s, -2), i.r + 1, i.s - 1)
    )


def act_Xm(z: PlaneElement) -> PlaneElement:
    """``X-[x^r y^s] = q^s [r]_{q^-2} x^{r-1} y^{s+1}``."""
    return _basiswise(
        z, lambda n, i: (q_pow(n, i.s) * q_integer(n, i.r, -2), i.r - 1, i.s + 1)
    )


CLOSED_ACTIONS: dict[DualGenerator, PlaneOperator] = {
    DualGenerator.H: act_H,
    DualGenerator.H_INV: act_H_inverse,
    DualGenerator.X_PLUS: act_Xp,
    DualGenerator.X_MINUS: act_Xm,
}


def _identity(z: PlaneElement) -> PlaneElement:
    return z


def _annihilate(z: PlaneElement) -> PlaneElement:
    return PlaneElement.zero(z.order)


def operator_power(op: PlaneOperator, exponent: int) -> PlaneOperator:
    def apply(z: PlaneElement) -> PlaneElement:
        for _ in range(exponent):
            z = op(z)
        return z

    return apply


def operator_witness(order: int, lhs: PlaneOperator, rhs: PlaneOperator, label: str) -> str | None:
    """First basis element where two operators disagree, rendered; None if they agree."""
    for index in plane_basis(order):
        z = basis_element(order, index)
        left, right = lhs(z), rhs(z)
        if left != right:
            return f"N={order}: {label} on {z.render()}: {left.render()} != {right.render()}"
    return None


def commutator_matrix(order: int) -> dict[BasisIndex, PlaneElement]:
    """``[X+, X-]`` as an operator, basis label -> image."""
    return {
        index: act_Xp(act_Xm(basis_element(order, index)))
        - act_Xm(act_Xp(basis_element(order, index)))
        for index in plane_basis(order)
    }


def operator_identity_check(order: int) -> dict[str, str | None]:
    """Operator relations of H on M_N; each value is a witness, or None if it holds.

    ``h_order`` and the two ``*_nilpotent`` entries are the stated relations
    ``H^N = 1`` and ``X+^N = X-^N = 0``; the remaining entries are observations
    (conjugation by H and diagonality of ``[X+, X-]``).
    """
    q2 = q_pow(order, 2)
    qm2 = q_pow(order, -2)
    results = {
        "h_order": operator_witness(order, operator_power(act_H, order), _identity, "H^N"),
        "x_plus_nilpotent": operator_witness(
            order, operator_power(act_Xp, order), _annihilate, "X+^N"
        ),
        "x_minus_nilpotent": operator_witness(
            order, operator_power(act_Xm, order), _annihilate, "X-^N"
        ),
        "h_conjugates_x_plus": operator_witness(
            order,
            lambda z: act_H(act_Xp(act_H_inverse(z))),
            lambda z: act_Xp(z) * q2,
            "H X+ H^-1 vs q^2 X+",
        ),
        "h_conjugates_x_minus": operator_witness(
            order,
            lambda z: act_H(act_Xm(act_H_inverse(z))),
            lambda z: act_Xm(z) * qm2,
            "H X- H^-1 vs q^-2 X-",
        ),
    }
    off_diagonal = [
        (index, image)
        for index, image in commutator_matrix(order).items()
        if any(target != index for target in image.terms)
    ]
    results["commutator_diagonal"] = (
        None
        if not off_diagonal
        else f"N={order}: [X+, X-] moves x^{off_diagonal[0][0].r}·y^{off_diagonal[0][0].s}"
    )
    return results


@dataclass(frozen=True)
class Decomposition:
    """Partition of the plane basis into N blocks; block k has grading k-1."""

    order: int
    blocks: tuple[tuple[BasisIndex, ...], ...]

    def block_of(self, index: BasisIndex) -> int:
        """1-based number of the block containing ``index``."""
        return (index.r + index.s) % self.order + 1


def decompose(order: int) -> Decomposition:
    """Blocks ``N_k = {x^r y^s : r + s = k - 1 mod N}``.

    Each block is listed as ``x^{k-1}, x^{k-2}y, ..., y^{k-1}, x^{N-1}y^k, ...``,
    i.e. the y-exponent runs 0..N-1.
    """
    check_order(order)
    blocks = tuple(
        tuple(BasisIndex((k - 1 - j) % order, j) for j in range(order))
        for k in range(1, order + 1)
    )
    return Decomposition(order, blocks)


def invariance_check(dec: Decomposition) -> dict[int, str | None]:
    """Per block: witness of an action leaving the block's span, or None if invariant."""
    results: dict[int, str | None] = {}
    for k, block in enumerate(dec.blocks, start=1):
        members = set(block)
        witness = None
        for index in block:
            z = basis_element(dec.order, index)
            for dual, act in CLOSED_ACTIONS.items():
                stray = [t for t in act(z).terms if t not in members]
                if stray:
                    witness = (
                        f"N={dec.order}: {dual.value} maps {z.render()} "
                        f"outside block {k}"
                    )
                    break
            if witness:
                break
        results[k] = witness
    logger.debug("Invariance for N=%d: %s", dec.order, results)
    return results
