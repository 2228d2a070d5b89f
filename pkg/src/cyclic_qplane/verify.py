"""Identity registry and the multi-N verification sweep.

Every identity is a function ``(order, config) -> witness | None`` registered
under a dotted id with a policy that decides how its outcome is reported:

- ``ALWAYS``: asserted at every N (``pass``/``fail``).
- ``ODD_PRIME``: asserted at odd primes, recorded elsewhere.
- ``ORDER_THREE``: literal N = 3 data, asserted at N = 3, recorded elsewhere.
- ``OBSERVED``: always recorded.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import TypeVar

import numpy as np

from . import calculus, hopf, qplane
from .config import VerifyConfig
from .cyclotomic import CycNum, q_integer, q_pow, to_float
from .hopf import DualGenerator, FElement, FGenerator, Side, TensorElement
from .models import ReportEntry, Status, VerificationReport
from .qplane import UNIT, X, Y, BasisIndex, PlaneElement, basis_element, plane_basis

logger = logging.getLogger(__name__)

T = TypeVar("T")
Check = Callable[[int, VerifyConfig], "str | None"]


class Policy(str, Enum):
    ALWAYS = "always"
    ODD_PRIME = "odd-prime"
    ORDER_THREE = "order-three"
    OBSERVED = "observed"


@dataclass(frozen=True)
class Identity:
    """A registered identity."""

    id: str
    policy: Policy
    check: Check

    def asserted_at(self, order: int, config: VerifyConfig) -> bool:
        if self.policy is Policy.ALWAYS:
            return True
        if self.policy is Policy.ODD_PRIME:
            return config.asserts_at(order)
        if self.policy is Policy.ORDER_THREE:
            return order == 3
        return False

    def evaluate(self, order: int, config: VerifyConfig) -> ReportEntry:
        witness = self.check(order, config)
        if self.asserted_at(order, config):
            status = Status.PASS if witness is None else Status.FAIL
        else:
            status = Status.RECORDED_TRUE if witness is None else Status.RECORDED_FALSE
        return ReportEntry(id=self.id, status=status, witness=witness)


REGISTRY: dict[str, Identity] = {}


def identity(identity_id: str, policy: Policy = Policy.ALWAYS) -> Callable[[Check], Check]:
    """Register ``check`` under ``identity_id``."""

    def register(check: Check) -> Check:
        if identity_id in REGISTRY:
            raise ValueError(f"identity '{identity_id}' registered twice")
        REGISTRY[identity_id] = Identity(identity_id, policy, check)
        return check

    return register


def identity_ids() -> list[str]:
    return sorted(REGISTRY)


def _rng(config: VerifyConfig, order: int) -> np.random.Generator:
    return np.random.default_rng([config.seed, order])


def _triples(
    items: Sequence[T], config: VerifyConfig, order: int, *, exhaustive: bool
) -> Iterator[tuple[T, T, T]]:
    """All triples when ``exhaustive``, otherwise a seeded sample."""
    if exhaustive:
        yield from itertools.product(items, repeat=3)
        return
    picks = _rng(config, order).integers(0, len(items), size=(config.sample_size, 3))
    for i, j, k in picks:
        yield items[i], items[j], items[k]


def _plane_triples(
    order: int, config: VerifyConfig
) -> Iterator[tuple[PlaneElement, PlaneElement, PlaneElement]]:
    elements = [basis_element(order, index) for index in plane_basis(order)]
    return _triples(elements, config, order, exhaustive=order <= config.exhaustive_limit)


def _plane_pairs(order: int) -> Iterator[tuple[PlaneElement, PlaneElement]]:
    elements = [basis_element(order, index) for index in plane_basis(order)]
    return itertools.product(elements, repeat=2)


def _random_cycnum(rng: np.random.Generator, order: int) -> CycNum:
    return CycNum(order, tuple(int(c) for c in rng.integers(-5, 6, size=order - 1)))


# cyclotomic


@identity("cyclotomic.sum_of_powers_vanishes")
def _sum_of_powers(order: int, config: VerifyConfig) -> str | None:
    total = sum((q_pow(order, k) for k in range(order)), CycNum.zero(order))
    return None if total.is_zero else f"N={order}: 1 + q + ... + q^{order - 1} = {total}"


@identity("cyclotomic.q_power_invertible")
def _q_power_invertible(order: int, config: VerifyConfig) -> str | None:
    one = CycNum.one(order)
    for k in range(-2 * order, 2 * order + 1):
        product = q_pow(order, k) * q_pow(order, -k)
        if product != one:
            return f"N={order}: q^{k} * q^{-k} = {product}"
    return None


@identity("cyclotomic.ratio_identity")
def _ratio_identity(order: int, config: VerifyConfig) -> str | None:
    step = CycNum.one(order) - q_pow(order, -2)
    for s in range(2 * order + 1):
        lhs = step * q_integer(order, s, -2)
        rhs = CycNum.one(order) - q_pow(order, -2 * s)
        if lhs != rhs:
            return f"N={order}, s={s}: (1 - q^-2)[s] = {lhs}, 1 - q^-2s = {rhs}"
    return None


@identity("cyclotomic.ring_axioms")
def _ring_axioms(order: int, config: VerifyConfig) -> str | None:
    rng = _rng(config, order)
    zero, one = CycNum.zero(order), CycNum.one(order)
    for _ in range(config.sample_size):
        u, v, w = (_random_cycnum(rng, order) for _ in range(3))
        laws = {
            "associativity": (u * v) * w == u * (v * w),
            "commutativity": u * v == v * u,
            "distributivity": u * (v + w) == u * v + u * w,
            "additive inverse": u + (-u) == zero,
            "unit": u * one == u,
        }
        broken = [name for name, holds in laws.items() if not holds]
        if broken:
            return f"N={order}: {broken[0]} fails for u={u}, v={v}, w={w}"
    return None


@identity("cyclotomic.float_homomorphism")
def _float_homomorphism(order: int, config: VerifyConfig) -> str | None:
    rng = _rng(config, order)
    for _ in range(config.sample_size):
        u, v = _random_cycnum(rng, order), _random_cycnum(rng, order)
        if abs(to_float(u * v) - to_float(u) * to_float(v)) > 1e-10 * (1 + abs(to_float(u * v))):
            return f"N={order}: float(u*v) != float(u)*float(v) for u={u}, v={v}"
        if abs(to_float(u + v) - (to_float(u) + to_float(v))) > 1e-10:
            return f"N={order}: float(u+v) != float(u)+float(v) for u={u}, v={v}"
    return None


# qplane


@identity("qplane.braiding")
def _braiding(order: int, config: VerifyConfig) -> str | None:
    for i in plane_basis(order):
        for j in plane_basis(order):
            a, b = basis_element(order, i), basis_element(order, j)
            if a * b != (b * a) * qplane.braiding_factor(order, i, j):
                return f"N={order}: braiding fails for {a.render()}, {b.render()}"
    return None


@identity("qplane.unit")
def _unit(order: int, config: VerifyConfig) -> str | None:
    one = PlaneElement.one(order)
    for index in plane_basis(order):
        z = basis_element(order, index)
        if one * z != z or z * one != z:
            return f"N={order}: 1 is not a unit for {z.render()}"
    return None


@identity("qplane.associativity")
def _associativity(order: int, config: VerifyConfig) -> str | None:
    for a, b, c in _plane_triples(order, config):
        if (a * b) * c != a * (b * c):
            return f"N={order}: ({a})({b})({c}) is not associative"
    return None


@identity("qplane.bracket_antisymmetry")
def _bracket_antisymmetry(order: int, config: VerifyConfig) -> str | None:
    for a, b in _plane_pairs(order):
        if qplane.bracket(a, b) != -qplane.bracket(b, a):
            return f"N={order}: [{a}, {b}] != -[{b}, {a}]"
    return None


@identity("qplane.jacobi")
def _jacobi(order: int, config: VerifyConfig) -> str | None:
    br = qplane.bracket
    for a, b, c in _plane_triples(order, config):
        total = br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))
        if not total.is_zero:
            return f"N={order}: Jacobi sum for {a}, {b}, {c} is {total.render()}"
    return None


@identity("qplane.derivation_algebra")
def _derivation_algebra(order: int, config: VerifyConfig) -> str | None:
    constants = {(i, j): (k, value) for i, j, k, value in qplane.structure_c(order)}
    for a, b, z in _plane_triples(order, config):
        (i,), (j,) = a.terms, b.terms
        lhs = qplane.derivation(i, qplane.derivation(j, z)) - qplane.derivation(
            j, qplane.derivation(i, z)
        )
        k, value = constants[(i, j)]
        rhs = qplane.derivation(k, z) * value
        if lhs != rhs:
            return f"N={order}: [e_{i}, e_{j}]({z}) = {lhs.render()} != {rhs.render()}"
    return None


@identity("qplane.derivation_leibniz")
def _derivation_leibniz(order: int, config: VerifyConfig) -> str | None:
    for e, a, b in _plane_triples(order, config):
        (i,) = e.terms
        lhs = qplane.derivation(i, a * b)
        rhs = qplane.derivation(i, a) * b + a * qplane.derivation(i, b)
        if lhs != rhs:
            return f"N={order}: e_{i}({a}·{b}) = {lhs.render()} != {rhs.render()}"
    return None


@identity("qplane.rep_homomorphism")
def _rep_homomorphism(order: int, config: VerifyConfig) -> str | None:
    for a, b in _plane_pairs(order):
        if qplane.rep_matrix(a * b) != qplane.rep_matrix(a) @ qplane.rep_matrix(b):
            return f"N={order}: rep({a}·{b}) != rep({a}) rep({b})"
    return None


@identity("qplane.rep_generators")
def _rep_generators(order: int, config: VerifyConfig) -> str | None:
    shift, clock = qplane.shift_matrix(order), qplane.clock_matrix(order)
    identity_matrix = qplane.PlaneMatrix.identity(order)
    if shift**order != identity_matrix:
        return f"N={order}: X^N != I"
    if clock**order != identity_matrix:
        return f"N={order}: Y^N != I"
    if shift @ clock != (clock @ shift).scale(q_pow(order, 1)):
        return f"N={order}: XY != qYX"
    return None


@identity("qplane.rep_faithful")
def _rep_faithful(order: int, config: VerifyConfig) -> str | None:
    rank = qplane.representation_rank(order)
    return None if rank == order**2 else f"N={order}: representation rank {rank} < {order**2}"


@identity("qplane.zero_forms_diagonal")
def _zero_forms_diagonal(order: int, config: VerifyConfig) -> str | None:
    for s in range(order):
        if not qplane.rep_matrix(PlaneElement.monomial(order, 0, s)).is_diagonal:
            return f"N={order}: rep(y^{s}) is not diagonal"
    return None


# hopf


@identity("hopf.f_associativity")
def _f_associativity(order: int, config: VerifyConfig) -> str | None:
    elements = [FElement(order, {m: CycNum.one(order)}) for m in hopf.f_basis(order)]
    exhaustive = len(elements) ** 3 <= 20000
    for u, v, w in _triples(elements, config, order, exhaustive=exhaustive):
        if (u * v) * w != u * (v * w):
            return f"N={order}: ({u})({v})({w}) is not associative"
    return None


@identity("hopf.f_dimension")
def _f_dimension(order: int, config: VerifyConfig) -> str | None:
    size = len(set(hopf.f_basis(order)))
    if size != order**3:
        return f"N={order}: normal-form basis has {size} elements"
    a, b, c = (FElement.generator(order, g) for g in (FGenerator.A, FGenerator.B, FGenerator.C))
    if a**order != FElement.one(order):
        return f"N={order}: a^N = {(a**order).render()}"
    if not (b**order).is_zero or not (c**order).is_zero:
        return f"N={order}: b^N or c^N does not vanish"
    return None


@identity("hopf.rewrite_confluence")
def _rewrite_confluence(order: int, config: VerifyConfig) -> str | None:
    for length in range(1, 6):
        for letters in itertools.product("abc", repeat=length):
            word = "".join(letters)
            left = hopf.rewrite_word(order, word)
            right = hopf.rewrite_word(order, word, from_right=True)
            product = FElement.one(order)
            for letter in word:
                product = product * FElement.generator(order, FGenerator(letter))
            if not left == right == product:
                return (
                    f"N={order}: {word} rewrites to {left.render()} / {right.render()}, "
                    f"product gives {product.render()}"
                )
    return None


@identity("hopf.ad_identity")
def _ad_identity(order: int, config: VerifyConfig) -> str | None:
    a = FElement.generator(order, FGenerator.A)
    expected = FElement.one(order) + FElement.monomial(order, 0, 1, 1, q_pow(order, 1))
    product = a * hopf.expand_d(order)
    return None if product == expected else f"N={order}: ad = {product.render()}"


@identity("hopf.qdet", Policy.ODD_PRIME)
def _qdet(order: int, config: VerifyConfig) -> str | None:
    if hopf.qdet_check(order):
        return None
    return (
        f"N={order}: ad - q bc = {hopf.qdet(order).render()}, "
        f"da - q^-1 bc = {hopf.qdet(order, left=False).render()}"
    )


@identity("hopf.qdet_central")
def _qdet_central(order: int, config: VerifyConfig) -> str | None:
    det = hopf.qdet(order)
    return None if hopf.is_central(det) else f"N={order}: {det.render()} is not central"


@identity("hopf.d_power_one", Policy.ODD_PRIME)
def _d_power_one(order: int, config: VerifyConfig) -> str | None:
    power = hopf.expand_d(order) ** order
    return None if power == FElement.one(order) else f"N={order}: d^N = {power.render()}"


def _relation_witness(order: int, side: Side) -> str | None:
    coact = hopf.coact_left if side is Side.LEFT else hopf.coact_right
    xp, yp = coact(PlaneElement.x(order)), coact(PlaneElement.y(order))
    lhs, rhs = xp * yp, (yp * xp) * q_pow(order, 1)
    if lhs != rhs:
        return f"N={order}: x'y' = {lhs.render()} but q y'x' = {rhs.render()}"
    return None


def _cyclic_witness(order: int, side: Side) -> str | None:
    coact = hopf.coact_left if side is Side.LEFT else hopf.coact_right
    one = TensorElement.one(order, side)
    for name, z in (("x", PlaneElement.x(order)), ("y", PlaneElement.y(order))):
        power = coact(z) ** order
        if power != one:
            return f"N={order}: {name}'^N = {power.render()}"
    return None


@identity("hopf.coaction_left_relation")
def _coaction_left_relation(order: int, config: VerifyConfig) -> str | None:
    return _relation_witness(order, Side.LEFT)


@identity("hopf.coaction_right_relation")
def _coaction_right_relation(order: int, config: VerifyConfig) -> str | None:
    return _relation_witness(order, Side.RIGHT)


@identity("hopf.coaction_left_cyclic", Policy.ODD_PRIME)
def _coaction_left_cyclic(order: int, config: VerifyConfig) -> str | None:
    return _cyclic_witness(order, Side.LEFT)


@identity("hopf.coaction_right_cyclic", Policy.ODD_PRIME)
def _coaction_right_cyclic(order: int, config: VerifyConfig) -> str | None:
    return _cyclic_witness(order, Side.RIGHT)


def _action_table_witness(order: int, *, literal: bool) -> str | None:
    for dual in DualGenerator:
        for index in (UNIT, X, Y):
            z = basis_element(order, index)
            derived = hopf.act_from_coaction(dual, z, literal=literal)
            closed = hopf.CLOSED_ACTIONS[dual](z)
            if derived != closed:
                return (
                    f"N={order}: {dual.value}({z.render()}) = {derived.render()} "
                    f"from the pairing, {closed.render()} in closed form"
                )
    return None


@identity("hopf.action_table")
def _action_table(order: int, config: VerifyConfig) -> str | None:
    return _action_table_witness(order, literal=False)


@identity("hopf.pairing_literal", Policy.ORDER_THREE)
def _pairing_literal(order: int, config: VerifyConfig) -> str | None:
    return _action_table_witness(order, literal=True)


@lru_cache(maxsize=32)
def _operator_results(order: int) -> dict[str, str | None]:
    return hopf.operator_identity_check(order)


@identity("hopf.h_order")
def _h_order(order: int, config: VerifyConfig) -> str | None:
    return _operator_results(order)["h_order"]


@identity("hopf.x_nilpotent")
def _x_nilpotent(order: int, config: VerifyConfig) -> str | None:
    results = _operator_results(order)
    return results["x_plus_nilpotent"] or results["x_minus_nilpotent"]


@identity("hopf.h_conjugation", Policy.OBSERVED)
def _h_conjugation(order: int, config: VerifyConfig) -> str | None:
    results = _operator_results(order)
    return results["h_conjugates_x_plus"] or results["h_conjugates_x_minus"]


@identity("hopf.commutator_diagonal", Policy.OBSERVED)
def _commutator_diagonal(order: int, config: VerifyConfig) -> str | None:
    return _operator_results(order)["commutator_diagonal"]


@identity("hopf.decomposition_partition")
def _decomposition_partition(order: int, config: VerifyConfig) -> str | None:
    dec = hopf.decompose(order)
    members = [index for block in dec.blocks for index in block]
    if len(dec.blocks) != order or any(len(block) != order for block in dec.blocks):
        return f"N={order}: expected {order} blocks of size {order}"
    if sorted(members) != plane_basis(order):
        return f"N={order}: blocks do not partition the basis"
    return None


@identity("hopf.decomposition_listing")
def _decomposition_listing(order: int, config: VerifyConfig) -> str | None:
    dec = hopf.decompose(order)
    for k, block in enumerate(dec.blocks, start=1):
        if block[0] != BasisIndex((k - 1) % order, 0):
            return f"N={order}: block {k} does not start with x^{k - 1}"
        stray = [index for index in block if dec.block_of(index) != k]
        if stray:
            return f"N={order}: x^{stray[0].r}·y^{stray[0].s} listed in block {k}"
    return None


@identity("hopf.block_invariance")
def _block_invariance(order: int, config: VerifyConfig) -> str | None:
    results = hopf.invariance_check(hopf.decompose(order))
    return next((witness for witness in results.values() if witness), None)


@identity("hopf.grading_triples", Policy.ORDER_THREE)
def _grading_triples(order: int, config: VerifyConfig) -> str | None:
    return calculus.grading_triples_witness(order)


# calculus


@identity("calculus.golden_table", Policy.ORDER_THREE)
def _golden_table(order: int, config: VerifyConfig) -> str | None:
    return calculus.golden_table_witness(order)


@identity("calculus.closed_form_vs_q_commutator")
def _closed_form_vs_q_commutator(order: int, config: VerifyConfig) -> str | None:
    for index in plane_basis(order):
        z = basis_element(order, index)
        closed, commutator = calculus.d(z), calculus.q_commutator(z, index.r)
        if closed != commutator:
            return f"N={order}: d({z}) = {closed.render()}, [x, z]_q = {commutator.render()}"
    return None


@identity("calculus.degree_shift")
def _degree_shift(order: int, config: VerifyConfig) -> str | None:
    for k in range(order):
        for index in calculus.omega(order, k):
            image = calculus.d(basis_element(order, index))
            if any(target.r != (k + 1) % order for target in image.terms):
                return f"N={order}: d maps x^{index.r}·y^{index.s} outside Omega^{(k + 1) % order}"
    return None


@identity("calculus.leibniz")
def _leibniz(order: int, config: VerifyConfig) -> str | None:
    for p, w in _plane_pairs(order):
        defect = calculus.leibniz_defect(p, w)
        if not defect.is_zero:
            return f"N={order}: Leibniz defect for {p}, {w} is {defect.render()}"
    return None


@identity("calculus.nilpotency", Policy.ODD_PRIME)
def _nilpotency(order: int, config: VerifyConfig) -> str | None:
    return calculus.nilpotency_witness(order)


@identity("calculus.d_power_closed_form")
def _d_power_closed_form(order: int, config: VerifyConfig) -> str | None:
    for index in plane_basis(order):
        z = basis_element(order, index)
        for m in range(1, order + 1):
            if calculus.d_power(z, m) != calculus.d_power_closed_form(order, index, m):
                return f"N={order}: d^{m}({z}) differs from the product formula"
    return None


@identity("calculus.d_nested")
def _d_nested(order: int, config: VerifyConfig) -> str | None:
    samples = [basis_element(order, index) for index in plane_basis(order)]
    for k in range(order):
        block = PlaneElement.zero(order)
        for index in calculus.omega(order, k):
            block = block + basis_element(order, index)
        samples.append(block)
    for z in samples:
        for m in range(1, order + 1):
            if calculus.d_nested(z, m) != calculus.d_power(z, m):
                return f"N={order}: nested q-commutators differ from d^{m} on {z.render()}"
    return None


@identity("calculus.zero_form_commutator")
def _zero_form_commutator(order: int, config: VerifyConfig) -> str | None:
    return calculus.zero_form_witness(order)


@identity("calculus.grading_matches_decomposition")
def _grading_matches_decomposition(order: int, config: VerifyConfig) -> str | None:
    table = calculus.grading_table(order)
    dec = hopf.decompose(order)
    for g, members in table.items():
        if tuple(members) != dec.blocks[g]:
            return f"N={order}: grading {g} differs from block {g + 1}"
    return None


@identity("calculus.omega_partition")
def _omega_partition(order: int, config: VerifyConfig) -> str | None:
    x = PlaneElement.x(order)
    covered: list[BasisIndex] = []
    for k in range(order):
        for index in calculus.omega(order, k):
            zero_form = PlaneElement.monomial(order, 0, index.s)
            if x**k * zero_form != basis_element(order, index):
                return f"N={order}: x^{k}·y^{index.s} is not the listed {k}-form"
            covered.append(index)
    if sorted(covered) != plane_basis(order):
        return f"N={order}: the spaces of k-forms do not partition the basis"
    return None


def run_order(order: int, config: VerifyConfig) -> VerificationReport:
    """Evaluate the selected identities at one order."""
    selected = [REGISTRY[i] for i in identity_ids() if config.wants(i)]
    logger.debug("Running %d identities for N=%d", len(selected), order)
    entries = [ident.evaluate(order, config) for ident in selected]
    report = VerificationReport.from_entries(order, entries)
    logger.info(
        "N=%d: %d pass, %d fail, %d recorded",
        order,
        report.summary.passed,
        report.summary.fail,
        report.summary.recorded,
    )
    return report


def run_verify(config: VerifyConfig) -> list[VerificationReport]:
    """Run the sweep over ``config.orders``; reports come back ordered by N.

    With ``config.jobs > 1`` orders are evaluated in worker processes.
    """
    orders = sorted(config.orders)
    if config.jobs > 1 and len(orders) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(run_order, orders, [config] * len(orders)))
    else:
        reports = [run_order(order, config) for order in orders]
    return sorted(reports, key=lambda report: report.n)
