"""Tests for the identity registry and the verification sweep."""

from __future__ import annotations

import pytest

from cyclic_qplane.config import VerifyConfig
from cyclic_qplane.models import Status
from cyclic_qplane.verify import (
    REGISTRY,
    Identity,
    Policy,
    identity,
    identity_ids,
    run_order,
    run_verify,
)


def statuses(order: int, config: VerifyConfig) -> dict[str, Status]:
    return {entry.id: entry.status for entry in run_order(order, config).entries}


class TestRegistry:
    """Tests for identity registration."""

    def test_ids_sorted_and_grouped(self) -> None:
        """Test ids are sorted and prefixed by module."""
        ids = identity_ids()
        assert ids == sorted(ids)
        assert {i.split(".")[0] for i in ids} == {"calculus", "cyclotomic", "hopf", "qplane"}

    def test_expected_ids_present(self) -> None:
        """Test a selection of registered identities."""
        for expected in (
            "calculus.golden_table",
            "calculus.leibniz",
            "calculus.nilpotency",
            "cyclotomic.ratio_identity",
            "hopf.coaction_left_cyclic",
            "hopf.qdet",
            "qplane.jacobi",
            "qplane.rep_homomorphism",
        ):
            assert expected in REGISTRY

    def test_duplicate_rejected(self) -> None:
        """Test an id cannot be registered twice."""
        with pytest.raises(ValueError):
            identity("qplane.jacobi")(lambda order, config: None)


class TestRunOrder:
    """Tests for a single-N run."""

    def test_order_three_all_pass(self, config: VerifyConfig) -> None:
        """Test every identity is asserted and passes at N = 3, except observations."""
        report = run_order(3, config)
        assert len(report.entries) == len(REGISTRY)
        assert [entry.id for entry in report.entries] == identity_ids()
        assert report.summary.fail == 0
        assert report.ok
        observed = {i for i, ident in REGISTRY.items() if ident.policy is Policy.OBSERVED}
        for entry in report.entries:
            if entry.id in observed:
                assert entry.status is Status.RECORDED_TRUE
            else:
                assert entry.status is Status.PASS, entry.witness

    def test_order_four_records(self) -> None:
        """Test odd-prime identities are recorded, not asserted, at N = 4."""
        config = VerifyConfig(
            orders=(4,),
            only=frozenset(
                {"hopf.coaction_left_cyclic", "calculus.nilpotency", "calculus.golden_table"}
            ),
        )
        result = statuses(4, config)
        assert result["hopf.coaction_left_cyclic"].is_recorded
        assert result["calculus.nilpotency"] is Status.RECORDED_TRUE
        assert result["calculus.golden_table"] is Status.RECORDED_FALSE

    def test_failure_carries_witness(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test an asserted identity with a witness is reported as a failure."""
        monkeypatch.setitem(
            REGISTRY,
            "test.always_fails",
            Identity("test.always_fails", Policy.ALWAYS, lambda order, config: f"N={order}: no"),
        )
        report = run_order(3, VerifyConfig(only=frozenset({"test.always_fails"})))
        assert report.summary.fail == 1
        assert report.entries[0].witness == "N=3: no"
        assert not report.ok


class TestRunVerify:
    """Tests for the multi-N sweep."""

    def test_small_orders_no_failures(self) -> None:
        """Test N = 2..4 run without failures."""
        reports = run_verify(VerifyConfig(orders=(2, 3, 4), sample_size=20))
        assert [report.n for report in reports] == [2, 3, 4]
        assert all(report.ok for report in reports)

    def test_nilpotency_at_odd_primes(self) -> None:
        """Test d^N = 0 is asserted and passes at N = 5 and 7."""
        config = VerifyConfig(orders=(5, 7), only=frozenset({"calculus.nilpotency"}))
        for report in run_verify(config):
            assert report.entries[0].status is Status.PASS

    def test_coaction_at_odd_primes(self) -> None:
        """Test coaction and determinant identities pass at N = 5."""
        ids = {
            "hopf.coaction_left_cyclic",
            "hopf.coaction_right_cyclic",
            "hopf.coaction_left_relation",
            "hopf.coaction_right_relation",
            "hopf.qdet",
            "hopf.d_power_one",
        }
        (report,) = run_verify(VerifyConfig(orders=(5,), only=frozenset(ids)))
        assert {entry.id for entry in report.entries} == ids
        assert all(entry.status is Status.PASS for entry in report.entries)

    def test_sampled_sweep_deterministic(self) -> None:
        """Test sampled sweeps above the exhaustive limit repeat exactly."""
        config = VerifyConfig(
            orders=(6,),
            only=frozenset({"qplane.jacobi", "qplane.associativity"}),
            exhaustive_limit=3,
            sample_size=30,
            seed=11,
        )
        first, second = run_verify(config), run_verify(config)
        assert first == second
        assert first[0].ok

    def test_jobs_match_serial(self) -> None:
        """Test worker processes give the same reports as a serial run."""
        only = frozenset({"calculus.golden_table", "cyclotomic.ratio_identity"})
        serial = run_verify(VerifyConfig(orders=(3, 4, 5), only=only))
        parallel = run_verify(VerifyConfig(orders=(3, 4, 5), only=only, jobs=2))
        assert serial == parallel
