"""Named checks that rebuild each structural claim about symplectic quandles.

Every check runs its claim against a list of instances. An instance whose
hypotheses do not hold is reported as NOT_APPLICABLE and can never count
as a contradiction; reports carry the witnesses needed to recompute the
verdict.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Sequence

from symquandle.config import SymplecticInstance
from symquandle.core.freemod import (
    ModuleVector,
    find_hyperbolic_pair,
    form_values,
    free_module,
    is_nondegenerate,
    is_unimodular,
    radical,
)
from symquandle.core.gaussian import gauss_form_properties, run_gaussian_suite
from symquandle.core.involution import (
    DEFAULT_SEARCH_CAP,
    EnumerationResult,
    LinearClassification,
    LinearContext,
    LinearMap,
    classify_all_linear_involutions,
    enumerate_anti_symplectic_involutions,
    enumerate_good_involutions,
    is_good_involution,
)
from symquandle.core.quandle import (
    FiniteQuandle,
    Permutation,
    is_antiautomorphism,
    is_automorphism,
    is_kei,
    is_trivial,
)
from symquandle.core.ring import Ring, characteristic, is_integral_domain
from symquandle.core.symplectic import DEFAULT_SIZE_CAP
from symquandle.errors import SearchCapExceeded
from symquandle.harness import instances as defaults

log = logging.getLogger("symquandle.harness")


class Verdict(Enum):
    CONFIRMS = "CONFIRMS_CLAIM"
    CONTRADICTS = "CONTRADICTS_CLAIM"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class HarnessOptions:
    limit: int | None = None
    threads: int = 1
    samples: int = 10_000
    coeff_bound: int = 50
    seed: int = 0
    timings: bool = False
    size_cap: int = DEFAULT_SIZE_CAP
    search_cap: int = DEFAULT_SEARCH_CAP


@dataclass
class InstanceReport:
    instance: dict[str, Any]
    hypotheses: dict[str, Any]
    result: dict[str, Any]
    verdict: Verdict

    def to_json(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "hypotheses": self.hypotheses,
            "result": self.result,
            "verdict": self.verdict.value,
        }


@dataclass
class VerificationReport:
    check_name: str
    instances: list[InstanceReport] = field(default_factory=list)
    timing: float | None = None

    @property
    def verdict(self) -> Verdict:
        verdicts = {r.verdict for r in self.instances}
        if Verdict.CONTRADICTS in verdicts:
            return Verdict.CONTRADICTS
        if Verdict.CONFIRMS in verdicts:
            return Verdict.CONFIRMS
        return Verdict.NOT_APPLICABLE

    def add(
        self,
        instance: dict[str, Any],
        hypotheses: dict[str, Any],
        result: dict[str, Any],
        verdict: Verdict,
    ) -> None:
        self.instances.append(InstanceReport(instance, hypotheses, result, verdict))

    def to_json(self) -> dict[str, Any]:
        return {
            "check_name": self.check_name,
            "instances": [r.to_json() for r in self.instances],
            "verdict": self.verdict.value,
            "timing": self.timing,
        }


def _confirms(ok: bool) -> Verdict:
    return Verdict.CONFIRMS if ok else Verdict.CONTRADICTS


def _vector_json(ring: Ring, v: ModuleVector) -> list[int | list[int]]:
    return [ring.to_json_value(c) for c in v]


def hypotheses(inst: SymplecticInstance, q: FiniteQuandle) -> dict[str, Any]:
    ring = inst.ring
    pair = find_hyperbolic_pair(inst.form)
    return {
        "characteristic": characteristic(ring),
        "integral_domain": is_integral_domain(ring),
        "kei": is_kei(q),
        "trivial": is_trivial(q),
        "nondegenerate": is_nondegenerate(inst.form),
        "unimodular": is_unimodular(inst.form),
        "hyperbolic_pair": None
        if pair is None
        else [_vector_json(ring, pair[0]), _vector_json(ring, pair[1])],
    }


def _enumeration_json(q: FiniteQuandle, found: EnumerationResult) -> dict[str, Any]:
    return {
        "count": found.count,
        "complete": found.complete,
        "nodes": found.nodes,
        "involutions": [p.cycle_notation(q.labels) for p in found.involutions],
        "antiautomorphism_violations": sum(
            1 for p in found.involutions if not is_antiautomorphism(q, p)
        ),
    }


# -- checks ------------------------------------------------------------------


def _morphism_violation(
    ctx: LinearContext, q: FiniteQuandle, a: LinearMap, c: LinearClassification
) -> bool:
    """Symplectic maps must be automorphisms, anti-symplectic ones antiautomorphisms."""
    if not (c.symplectic or c.anti_symplectic):
        return False
    p = Permutation.from_array(ctx.permutation(a))
    return (c.symplectic and not is_automorphism(q, p)) or (
        c.anti_symplectic and not is_antiautomorphism(q, p)
    )


def verify_theorem1(
    instances: Sequence[SymplecticInstance] | None = None, options: HarnessOptions = HarnessOptions()
) -> VerificationReport:
    """Nontrivial, over a domain: linear good involution exists <=> kei <=> char 2."""
    report = VerificationReport("theorem1")
    for inst in instances if instances is not None else defaults.theorem1_instances():
        q = inst.quandle(options.size_cap)
        hyp = hypotheses(inst, q)
        if not hyp["integral_domain"] or hyp["trivial"]:
            report.add(inst.describe(), hyp, {}, Verdict.NOT_APPLICABLE)
            continue

        ctx = LinearContext(inst.ring, inst.form, q)
        classified = classify_all_linear_involutions(
            inst.ring, inst.form, search_cap=options.search_cap, context=ctx
        )
        good = [a for a, c in classified if c.good]
        violations = [
            a.to_json(inst.ring)
            for a, c in classified
            if ((c.condition1 or c.condition2) and not c.isotropic)
            or (c.condition1 and not c.symplectic)
            or (c.good and not c.anti_symplectic)
            or _morphism_violation(ctx, q, a, c)
        ]
        exists = bool(good)
        char2 = hyp["characteristic"] == 2
        equivalence = exists == hyp["kei"] == char2
        result = {
            "linear_involutions": len(classified),
            "linear_good_involutions": [a.to_json(inst.ring) for a in good],
            "identity_is_good": LinearMap.identity(inst.ring, inst.rank) in good,
            "equivalence_holds": equivalence,
            "property_violations": violations,
        }
        report.add(inst.describe(), hyp, result, _confirms(equivalence and not violations))
    return report


def verify_theorem2(
    instances: Sequence[SymplecticInstance] | None = None, options: HarnessOptions = HarnessOptions()
) -> VerificationReport:
    """Char 2, domain, nondegenerate, nontrivial: the only good involution is the identity."""
    report = VerificationReport("theorem2")
    for inst in instances if instances is not None else defaults.theorem2_instances():
        q = inst.quandle(options.size_cap)
        hyp = hypotheses(inst, q)
        found = enumerate_good_involutions(q, options.limit, threads=options.threads)
        result = _enumeration_json(q, found)
        gated = (
            hyp["characteristic"] == 2
            and hyp["integral_domain"]
            and hyp["nondegenerate"]
            and not hyp["trivial"]
        )
        if not gated:
            report.add(inst.describe(), hyp, result, Verdict.NOT_APPLICABLE)
            continue
        only_identity = found.complete and list(found.involutions) == [Permutation.identity(q.size)]
        report.add(
            inst.describe(),
            hyp,
            result,
            _confirms(only_identity and result["antiautomorphism_violations"] == 0),
        )
    return report


def _anti_symplectic_witness(inst: SymplecticInstance, options: HarnessOptions) -> dict[str, Any]:
    try:
        anti = enumerate_anti_symplectic_involutions(inst.ring, inst.form, search_cap=options.search_cap)
    except SearchCapExceeded:
        return {"searched": False, "witness": None}
    return {"searched": True, "witness": anti[0].to_json(inst.ring) if anti else None}


def _claims_verdict(claims: dict[str, bool | None]) -> Verdict:
    """Combine per-claim outcomes; None marks a claim whose own hypotheses fail."""
    applicable = [ok for ok in claims.values() if ok is not None]
    if not applicable:
        return Verdict.NOT_APPLICABLE
    return _confirms(all(applicable))


def verify_theorem3(
    instances: Sequence[SymplecticInstance] | None = None, options: HarnessOptions = HarnessOptions()
) -> VerificationReport:
    """Char != 2 with a hyperbolic pair: no good involution at all.

    The corollary "unimodular implies a hyperbolic pair" is checked on the
    same instances under its own hypothesis (unimodular form).
    """
    report = VerificationReport("theorem3")
    for inst in instances if instances is not None else defaults.theorem3_instances():
        q = inst.quandle(options.size_cap)
        hyp = hypotheses(inst, q)
        found = enumerate_good_involutions(q, options.limit, threads=options.threads)
        result = _enumeration_json(q, found)
        result["anti_symplectic"] = _anti_symplectic_witness(inst, options)

        claims: dict[str, bool | None] = {"no_good_involution": None, "unimodular_implies_pair": None}
        if hyp["characteristic"] != 2 and hyp["hyperbolic_pair"] is not None:
            claims["no_good_involution"] = found.complete and found.count == 0
        if hyp["unimodular"]:
            claims["unimodular_implies_pair"] = hyp["hyperbolic_pair"] is not None
        result["claims"] = claims
        report.add(inst.describe(), hyp, result, _claims_verdict(claims))
    return report


def verify_example_z9(options: HarnessOptions = HarnessOptions()) -> VerificationReport:
    """(Z/9)^2 with 3(ad - bc): no hyperbolic pair and still no good involution."""
    report = VerificationReport("example-z9")
    inst = defaults.z9_example()
    q = inst.quandle(options.size_cap)
    hyp = hypotheses(inst, q)
    found = enumerate_good_involutions(q, options.limit, threads=options.threads)
    values = form_values(inst.form)
    result = _enumeration_json(q, found)
    result["form_values"] = values
    result["radical"] = [free_module(inst.ring, inst.rank).label(x) for x in radical(inst.form)]
    ok = (
        hyp["hyperbolic_pair"] is None
        and found.complete
        and found.count == 0
        and values == [0, 3, 6]
    )
    report.add(inst.describe(), hyp, result, _confirms(ok))
    return report


def verify_gaussian(options: HarnessOptions = HarnessOptions()) -> VerificationReport:
    """Seeded sampling of the non-linear good involution on (Z[i])^2."""
    report = VerificationReport("gaussian")
    suite = run_gaussian_suite(options.samples, options.coeff_bound, options.seed)
    props = gauss_form_properties()
    instance = {"name": "Z[i]^2 form 3(ad-bc)", "ring": "Z[i]", "rank": 2}
    hyp = {
        "characteristic": 0,
        "integral_domain": True,
        "nondegenerate": props["nondegenerate"],
        "unimodular": props["unimodular"],
        "determinant": props["determinant"],
    }
    report.add(instance, hyp, suite.to_json(), _confirms(suite.total_failures == 0))
    return report


def _fixes_pointwise(p: Permutation, subset: Sequence[int]) -> bool:
    return all(p(x) == x for x in subset)


def _involutions_on(points: list[int], n: int) -> list[Permutation]:
    """Every involution of range(n) that moves only ``points``."""
    out: list[Permutation] = []

    def build(rest: list[int], images: list[int]) -> None:
        if not rest:
            out.append(Permutation(tuple(images)))
            return
        x, tail = rest[0], rest[1:]
        build(tail, images)  # x fixed
        for j, z in enumerate(tail):
            nxt = images.copy()
            nxt[x], nxt[z] = z, x
            build(tail[:j] + tail[j + 1 :], nxt)

    build(points, list(range(n)))
    return sorted(out, key=lambda p: p.images)


def verify_degenerate_remark(options: HarnessOptions = HarnessOptions()) -> VerificationReport:
    """F_2^3 with radical span(e3): is every involution that is the identity on W good?"""
    report = VerificationReport("degenerate-remark")
    inst = defaults.degenerate_f2_cubed()
    q = inst.quandle(options.size_cap)
    hyp = hypotheses(inst, q)
    module = free_module(inst.ring, inst.rank)
    found = enumerate_good_involutions(q, options.limit, threads=options.threads)

    # W = span(e1, e2) is the complement of the radical
    w = [x for x in range(module.size) if module.decode(x)[2] == inst.ring.zero]
    outside = [x for x in range(module.size) if x not in w]
    pointwise = _involutions_on(outside, module.size)

    ctx = LinearContext(inst.ring, inst.form, q)
    linear = [
        a
        for a, c in classify_all_linear_involutions(
            inst.ring, inst.form, search_cap=options.search_cap, context=ctx
        )
        if _fixes_pointwise(Permutation.from_array(ctx.permutation(a)), w)
    ]

    counterexample: str | None = None
    pointwise_good = 0
    for p in pointwise:
        if is_good_involution(q, p):
            pointwise_good += 1
        elif counterexample is None:
            counterexample = p.cycle_notation(q.labels)
    linear_good = 0
    for a in linear:
        p = Permutation.from_array(ctx.permutation(a))
        if is_good_involution(q, p):
            linear_good += 1
        elif counterexample is None:
            counterexample = p.cycle_notation(q.labels)

    result = _enumeration_json(q, found)
    result.update(
        {
            "w": [module.label(x) for x in w],
            "pointwise_family": len(pointwise),
            "pointwise_family_good": pointwise_good,
            "linear_family": len(linear),
            "linear_family_good": linear_good,
            "remark_holds": counterexample is None,
            "counterexample": counterexample,
        }
    )
    # The remark is not a proved statement, so a failure is recorded rather than counted against it.
    verdict = Verdict.CONFIRMS if counterexample is None else Verdict.NOT_APPLICABLE
    report.add(inst.describe(), hyp, result, verdict)
    return report


def verify_kei_dichotomy(
    instances: Sequence[SymplecticInstance] | None = None, options: HarnessOptions = HarnessOptions()
) -> VerificationReport:
    """Over a domain: nontrivial => (kei <=> char 2), and char != 2 => (kei <=> trivial)."""
    report = VerificationReport("kei-dichotomy")
    for inst in instances if instances is not None else defaults.kei_dichotomy_instances():
        q = inst.quandle(options.size_cap)
        hyp = hypotheses(inst, q)
        if not hyp["integral_domain"]:
            report.add(inst.describe(), hyp, {}, Verdict.NOT_APPLICABLE)
            continue
        char2 = hyp["characteristic"] == 2
        nontrivial_ok = hyp["trivial"] or hyp["kei"] == char2
        odd_ok = char2 or hyp["kei"] == hyp["trivial"]
        # Finite modules: injective into the dual iff bijective.
        finite_ok = hyp["nondegenerate"] == hyp["unimodular"]
        result = {
            "nontrivial_kei_iff_char2": nontrivial_ok,
            "odd_char_kei_iff_trivial": odd_ok,
            "nondegenerate_iff_unimodular": finite_ok,
        }
        report.add(inst.describe(), hyp, result, _confirms(nontrivial_ok and odd_ok and finite_ok))
    return report


CHECKS: dict[str, Callable[[HarnessOptions], VerificationReport]] = {
    "theorem1": lambda o: verify_theorem1(options=o),
    "theorem2": lambda o: verify_theorem2(options=o),
    "theorem3": lambda o: verify_theorem3(options=o),
    "example-z9": verify_example_z9,
    "gaussian": verify_gaussian,
    "degenerate-remark": verify_degenerate_remark,
    "kei-dichotomy": lambda o: verify_kei_dichotomy(options=o),
}


def run_checks(names: Sequence[str], options: HarnessOptions = HarnessOptions()) -> list[VerificationReport]:
    """Run checks in the given order; ``all`` expands to every check."""
    selected: list[str] = []
    for name in names:
        if name == "all":
            selected.extend(CHECKS)
        elif name in CHECKS:
            selected.append(name)
        else:
            raise KeyError(name)

    reports: list[VerificationReport] = []
    for name in selected:
        start = time.perf_counter()
        report = CHECKS[name](options)
        elapsed = time.perf_counter() - start
        log.info("check %s verdict=%s elapsed=%.3fs", name, report.verdict.value, elapsed)
        if options.timings:
            report.timing = round(elapsed, 6)
        reports.append(report)
    return reports


def format_reports_text(reports: Sequence[VerificationReport]) -> str:
    """Fixed-width table: one row per instance, then one summary row per check."""
    rows = [("CHECK", "INSTANCE", "VERDICT")]
    for report in reports:
        for inst in report.instances:
            rows.append((report.check_name, str(inst.instance.get("name", "")), inst.verdict.value))
        rows.append((report.check_name, "*", report.verdict.value))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(r)).rstrip() for r in rows]
    return "\n".join(lines)
