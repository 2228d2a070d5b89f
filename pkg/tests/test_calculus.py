"""Tests for the Z_N-graded calculus."""

from __future__ import annotations

import itertools

import pytest

from cyclic_qplane.calculus import (
    d,
    d_nested,
    d_power,
    d_power_closed_form,
    form_degree,
    golden_table_witness,
    grading,
    grading_table,
    grading_triples_witness,
    homogeneous_degree,
    leibniz_defect,
    nilpotency_witness,
    omega,
    q_commutator,
    zero_form_witness,
)
from cyclic_qplane.cyclotomic import CycNum
from cyclic_qplane.errors import DegreeError, HomogeneityError
from cyclic_qplane.qplane import BasisIndex, PlaneElement, basis_element, plane_basis


class TestGrading:
    """Tests for grading, form degree and the spaces of k-forms."""

    def test_grading_and_degree(self) -> None:
        """Test |x^r y^s| = r + s and deg = r, both mod N."""
        assert grading(3, BasisIndex(2, 2)) == 1
        assert form_degree(3, BasisIndex(2, 2)) == 2

    def test_omega(self) -> None:
        """Test Omega^1 at N = 3."""
        assert omega(3, 1) == [BasisIndex(1, 0), BasisIndex(1, 1), BasisIndex(1, 2)]

    def test_omega_degree_range(self) -> None:
        """Test that k outside 0..N-1 is rejected."""
        with pytest.raises(DegreeError):
            omega(3, 3)
        with pytest.raises(DegreeError):
            omega(3, -1)

    def test_grading_table(self) -> None:
        """Test the grading triples at N = 3."""
        table = grading_table(3)
        assert set(table[0]) == {BasisIndex(0, 0), BasisIndex(1, 2), BasisIndex(2, 1)}
        assert set(table[1]) == {BasisIndex(1, 0), BasisIndex(0, 1), BasisIndex(2, 2)}
        assert set(table[2]) == {BasisIndex(2, 0), BasisIndex(0, 2), BasisIndex(1, 1)}

    def test_homogeneous_degree(self) -> None:
        """Test the common form degree of a combination."""
        z = PlaneElement.monomial(4, 2, 0) + PlaneElement.monomial(4, 2, 3)
        assert homogeneous_degree(z) == 2
        assert homogeneous_degree(PlaneElement.x(4) + PlaneElement.y(4)) is None
        assert homogeneous_degree(PlaneElement.zero(4)) is None


class TestDifferential:
    """Tests for d on M_N."""

    def test_values_n3(self) -> None:
        """Test d(y) = (1 - q^2) xy, d(x^2) = 1 - q^2 and d(xy) = 0 at N = 3."""
        two_plus_q = CycNum.from_powers(3, [2, 1])
        assert d(PlaneElement.y(3)) == PlaneElement.monomial(3, 1, 1, two_plus_q)
        assert d(PlaneElement.monomial(3, 2, 0)) == PlaneElement.scalar(two_plus_q)
        assert d(PlaneElement.monomial(3, 1, 1)).is_zero
        assert d(PlaneElement.one(3)).is_zero

    def test_linear(self) -> None:
        """Test d(u + v) = d(u) + d(v)."""
        u, v = PlaneElement.y(5), PlaneElement.monomial(5, 3, 1)
        assert d(u + v) == d(u) + d(v)

    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    def test_q_commutator_form(self, n: int) -> None:
        """Test d(z) = x z - q^k z x on every basis k-form."""
        for index in plane_basis(n):
            z = basis_element(n, index)
            assert d(z) == q_commutator(z, index.r)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_nilpotent(self, n: int) -> None:
        """Test d^N = 0 on every basis element."""
        for index in plane_basis(n):
            assert d_power(basis_element(n, index), n).is_zero
        assert nilpotency_witness(n) is None

    def test_lower_power_nonzero(self) -> None:
        """Test d^{N-1}(x) = prod (1 - q^k) = N at N = 5."""
        assert d_power(PlaneElement.x(5), 4) == PlaneElement.scalar(CycNum.from_int(5, 5))

    def test_d_power_requires_positive(self) -> None:
        """Test that m < 1 is rejected."""
        with pytest.raises(ValueError):
            d_power(PlaneElement.y(3), 0)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_closed_form_of_powers(self, n: int) -> None:
        """Test d^m against the product formula."""
        for index in plane_basis(n):
            for m in range(1, n + 1):
                assert d_power(basis_element(n, index), m) == d_power_closed_form(n, index, m)

    @pytest.mark.parametrize("n", [3, 4])
    def test_nested_q_commutators(self, n: int) -> None:
        """Test nested q-commutators reproduce d^m on a homogeneous 1-form."""
        z = PlaneElement.monomial(n, 1, 0) + PlaneElement.monomial(n, 1, 2)
        for m in range(1, n + 1):
            assert d_nested(z, m) == d_power(z, m)

    def test_nested_requires_homogeneous(self) -> None:
        """Test that a mixed element is rejected."""
        with pytest.raises(HomogeneityError):
            d_nested(PlaneElement.x(3) + PlaneElement.y(3), 2)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_zero_forms(self, n: int) -> None:
        """Test d(y^m) = [x, y^m] = (1 - q^-m) x y^m."""
        assert zero_form_witness(n) is None


class TestLeibniz:
    """Tests for the q-deformed Leibniz rule."""

    @pytest.mark.parametrize("n", range(2, 8))
    def test_basis_pairs(self, n: int) -> None:
        """Test the defect vanishes on all basis pairs."""
        basis = [basis_element(n, index) for index in plane_basis(n)]
        for p, w in itertools.product(basis, repeat=2):
            assert leibniz_defect(p, w).is_zero

    def test_homogeneous_combination(self) -> None:
        """Test the rule with a homogeneous 2-form times a mixed element."""
        p = PlaneElement.monomial(4, 2, 1) + PlaneElement.monomial(4, 2, 3)
        w = PlaneElement.x(4) + PlaneElement.y(4) + PlaneElement.one(4)
        assert leibniz_defect(p, w).is_zero

    def test_rejects_mixed_left_factor(self) -> None:
        """Test that the left factor must be homogeneous."""
        with pytest.raises(HomogeneityError):
            leibniz_defect(PlaneElement.x(3) + PlaneElement.y(3), PlaneElement.y(3))


class TestLiteralTables:
    """Tests for the literal N = 3 data."""

    def test_golden_table_at_three(self) -> None:
        """Test the differential table matches at N = 3."""
        assert golden_table_witness(3) is None

    def test_golden_table_elsewhere(self) -> None:
        """Test the literal table does not describe N = 5."""
        assert golden_table_witness(5) is not None

    def test_grading_triples(self) -> None:
        """Test the grading triples match at N = 3 only."""
        assert grading_triples_witness(3) is None
        assert grading_triples_witness(4) is not None
