"""Tests for the verification harness."""

import dataclasses
import json

import pytest

from symquandle.core.involution import LinearContext, LinearMap, classify_linear_involution
from symquandle.harness import instances
from symquandle.harness.verify import (
    CHECKS,
    HarnessOptions,
    Verdict,
    VerificationReport,
    _morphism_violation,
    format_reports_text,
    run_checks,
    verify_degenerate_remark,
    verify_example_z9,
    verify_gaussian,
    verify_kei_dichotomy,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
)

FAST = HarnessOptions(samples=200, coeff_bound=10)


def _by_name(report: VerificationReport) -> dict[str, Verdict]:
    return {r.instance["name"]: r.verdict for r in report.instances}


class TestReportShape:
    """Tests for VerificationReport aggregation and serialization."""

    def test_aggregate_verdict(self) -> None:
        report = VerificationReport("x")
        assert report.verdict is Verdict.NOT_APPLICABLE
        report.add({"name": "a"}, {}, {}, Verdict.NOT_APPLICABLE)
        report.add({"name": "b"}, {}, {}, Verdict.CONFIRMS)
        assert report.verdict is Verdict.CONFIRMS
        report.add({"name": "c"}, {}, {}, Verdict.CONTRADICTS)
        assert report.verdict is Verdict.CONTRADICTS

    def test_to_json_keys(self) -> None:
        payload = verify_example_z9(FAST).to_json()
        assert set(payload) == {"check_name", "instances", "verdict", "timing"}
        assert payload["timing"] is None
        assert set(payload["instances"][0]) == {"instance", "hypotheses", "result", "verdict"}
        # must be serializable as-is
        json.dumps(payload)


class TestTheorem1:
    """Tests for verify_theorem1()."""

    def test_small_instances(self) -> None:
        chosen = [
            instances._standard(instances.F2),
            instances._standard(instances.F3),
            instances._scaled(instances.F5, 2),
            instances._standard(instances.Z9),
        ]
        report = verify_theorem1(chosen, FAST)
        verdicts = _by_name(report)
        assert verdicts["F2^2 standard"] is Verdict.CONFIRMS
        assert verdicts["F3^2 standard"] is Verdict.CONFIRMS
        assert verdicts["F5^2 scaled c=2"] is Verdict.CONFIRMS
        # Z/9 is not a domain
        assert verdicts["Z9^2 standard"] is Verdict.NOT_APPLICABLE
        assert report.verdict is Verdict.CONFIRMS

    def test_identity_is_good_in_char2(self) -> None:
        report = verify_theorem1([instances._standard(instances.F4)], FAST)
        result = report.instances[0].result
        assert result["identity_is_good"] is True
        assert result["property_violations"] == []
        assert result["equivalence_holds"] is True

    def test_trivial_not_applicable(self) -> None:
        report = verify_theorem1([instances._zero(instances.F3)], FAST)
        assert report.instances[0].verdict is Verdict.NOT_APPLICABLE

    def test_no_property_violations(self) -> None:
        chosen = [
            instances._standard(instances.F3),
            instances._scaled(instances.F5, 2),
            instances._standard(instances.F4),
        ]
        for inst in verify_theorem1(chosen, FAST).instances:
            assert inst.result["property_violations"] == []

    def test_morphism_mismatch_is_flagged(self) -> None:
        inst = instances._standard(instances.F3)
        q = inst.quandle()
        ctx = LinearContext(inst.ring, inst.form, q)
        swap = LinearMap(((0, 1), (1, 0)))
        honest = classify_linear_involution(inst.ring, inst.form, swap, context=ctx)
        assert honest.anti_symplectic and not honest.symplectic
        assert not _morphism_violation(ctx, q, swap, honest)
        # an anti-symplectic swap over F3 is not an automorphism
        mislabeled = dataclasses.replace(honest, symplectic=True, anti_symplectic=False)
        assert _morphism_violation(ctx, q, swap, mislabeled)


class TestTheorem2:
    """Tests for verify_theorem2()."""

    def test_defaults(self) -> None:
        report = verify_theorem2(options=FAST)
        verdicts = _by_name(report)
        assert verdicts["F2^2 standard"] is Verdict.CONFIRMS
        assert verdicts["F4^2 standard"] is Verdict.CONFIRMS
        assert verdicts["F2^4 standard"] is Verdict.CONFIRMS
        assert verdicts["F3^2 standard"] is Verdict.NOT_APPLICABLE
        assert verdicts["F2^2 zero"] is Verdict.NOT_APPLICABLE
        assert verdicts["F2^3 degenerate rank-2 form"] is Verdict.NOT_APPLICABLE
        assert report.verdict is Verdict.CONFIRMS

    def test_enumeration_recorded_when_gated_out(self) -> None:
        report = verify_theorem2([instances._zero(instances.F2)], FAST)
        result = report.instances[0].result
        assert result["count"] == 10
        assert result["antiautomorphism_violations"] == 0

    def test_limit_passed_through(self) -> None:
        report = verify_theorem2([instances._standard(instances.F2)], HarnessOptions(limit=1))
        result = report.instances[0].result
        assert result["involutions"] == ["()"]


class TestTheorem3:
    """Tests for verify_theorem3()."""

    def test_small_instances(self) -> None:
        chosen = [
            instances._standard(instances.F3),
            instances._scaled(instances.F5, 2),
            instances._standard(instances.F2),
            instances.z9_example(),
        ]
        report = verify_theorem3(chosen, FAST)
        verdicts = _by_name(report)
        assert verdicts["F3^2 standard"] is Verdict.CONFIRMS
        assert verdicts["F5^2 scaled c=2"] is Verdict.CONFIRMS
        # char 2: only the unimodular corollary applies
        assert verdicts["F2^2 standard"] is Verdict.CONFIRMS
        assert verdicts["Z9^2 gram [[0,3],[6,0]]"] is Verdict.NOT_APPLICABLE

    def test_claims_carry_their_own_gates(self) -> None:
        chosen = [
            instances._standard(instances.F2),
            instances.z9_example(),
            instances._standard(instances.F3),
        ]
        claims = [r.result["claims"] for r in verify_theorem3(chosen, FAST).instances]
        assert claims[0] == {"no_good_involution": None, "unimodular_implies_pair": True}
        assert claims[1] == {"no_good_involution": None, "unimodular_implies_pair": None}
        assert claims[2] == {"no_good_involution": True, "unimodular_implies_pair": True}

    def test_anti_symplectic_witness(self) -> None:
        report = verify_theorem3([instances._standard(instances.F3)], FAST)
        result = report.instances[0].result
        assert result["anti_symplectic"]["searched"] is True
        witness = result["anti_symplectic"]["witness"]
        inst = instances._standard(instances.F3)
        assert classify_linear_involution(inst.ring, inst.form, witness).anti_symplectic

    def test_search_cap_reported(self) -> None:
        options = HarnessOptions(search_cap=10)
        report = verify_theorem3([instances._standard(instances.F3)], options)
        assert report.instances[0].result["anti_symplectic"] == {"searched": False, "witness": None}


class TestExampleZ9:
    """Tests for verify_example_z9()."""

    def test_confirms(self) -> None:
        report = verify_example_z9(FAST)
        assert report.verdict is Verdict.CONFIRMS
        inst = report.instances[0]
        assert inst.hypotheses["hyperbolic_pair"] is None
        assert inst.hypotheses["nondegenerate"] is False
        assert inst.result["form_values"] == [0, 3, 6]
        assert inst.result["count"] == 0
        assert len(inst.result["radical"]) == 9
        assert "(3,0)" in inst.result["radical"]


class TestGaussian:
    """Tests for verify_gaussian()."""

    def test_confirms(self) -> None:
        report = verify_gaussian(FAST)
        assert report.verdict is Verdict.CONFIRMS
        inst = report.instances[0]
        assert inst.hypotheses["unimodular"] is False
        assert inst.hypotheses["nondegenerate"] is True
        assert inst.result["samples"] == 200


class TestDegenerateRemark:
    """Tests for verify_degenerate_remark()."""

    def test_counterexample_found(self) -> None:
        report = verify_degenerate_remark(FAST)
        inst = report.instances[0]
        assert inst.verdict is Verdict.NOT_APPLICABLE
        assert inst.result["count"] == 2
        assert inst.result["remark_holds"] is False
        assert inst.result["counterexample"] is not None
        assert inst.result["pointwise_family"] == 10
        assert inst.result["pointwise_family_good"] == 1
        assert inst.result["linear_family"] == 4
        assert inst.result["linear_family_good"] == 1
        assert len(inst.result["w"]) == 4


class TestKeiDichotomy:
    """Tests for verify_kei_dichotomy()."""

    def test_defaults(self) -> None:
        report = verify_kei_dichotomy(options=FAST)
        assert report.verdict is Verdict.CONFIRMS
        verdicts = _by_name(report)
        assert verdicts["Z15^2 standard"] is Verdict.NOT_APPLICABLE
        assert verdicts["F3^2 zero"] is Verdict.CONFIRMS


class TestRunChecks:
    """Tests for run_checks() and format_reports_text()."""

    def test_unknown_name(self) -> None:
        with pytest.raises(KeyError):
            run_checks(["no-such-check"], FAST)

    def test_order_and_timing(self) -> None:
        options = HarnessOptions(samples=50, coeff_bound=5, timings=True)
        reports = run_checks(["gaussian", "example-z9"], options)
        assert [r.check_name for r in reports] == ["gaussian", "example-z9"]
        assert all(isinstance(r.timing, float) for r in reports)

    def test_check_names(self) -> None:
        assert list(CHECKS) == [
            "theorem1",
            "theorem2",
            "theorem3",
            "example-z9",
            "gaussian",
            "degenerate-remark",
            "kei-dichotomy",
        ]

    def test_text_table(self) -> None:
        text = format_reports_text(run_checks(["example-z9"], FAST))
        lines = text.splitlines()
        assert lines[0].split() == ["CHECK", "INSTANCE", "VERDICT"]
        assert lines[-1].split() == ["example-z9", "*", "CONFIRMS_CLAIM"]
