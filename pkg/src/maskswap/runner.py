"""Execute scenario specs: predictor + oracle + comparison, in bulk."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor

from .errata import errata_for
from .errors import MaskSwapError, ScenarioFormatError
from .masking import (
    PhaseAmplitudeInput,
    QuditAmplitudes,
    mask_li_qudit,
    mask_modi_qubit,
    verify_masking,
    verify_phase_masking,
)
from .oracle import compare, compare_distributions, simulate_swap
from .report import ScenarioResult, VerificationReport
from .scenarios import (
    ScenarioSpec,
    bell_bell_scenario,
    cat_bell_scenario,
    cat_swap_scenario,
    li_masked_scenario,
    masked_ghz_scenario,
    masked_qudit_scenario,
)
from .swapping import (
    predict_bell_bell,
    predict_cat_bell_clear,
    predict_cat_bell_karimipour,
    predict_cat_swap,
    predict_li_masked_swap,
    predict_masked_ghz_swap,
    predict_masked_qudit_swap,
)

WORKERS_ENV = "MASKSWAP_WORKERS"


def _result_from_comparison(spec: ScenarioSpec, reports) -> ScenarioResult:
    verdict = all(r.verdict for r in reports)
    return ScenarioResult(
        name=spec.name,
        family=spec.family,
        verdict=verdict,
        max_probability_deviation=max(r.max_probability_deviation for r in reports),
        min_fidelity=min(r.min_fidelity for r in reports),
        missing=sorted({str(l) for r in reports for l in r.missing_labels}),
        extra=sorted({str(l) for r in reports for l in r.extra_labels}),
    )


def _run_masking(spec: ScenarioSpec) -> ScenarioResult:
    kinds = {type(inp) for inp in spec.inputs}
    if kinds == {int}:
        family = [mask_modi_qubit(l) for l in spec.inputs]
    elif kinds == {PhaseAmplitudeInput}:
        # The phase-hiding masker has eta-dependent marginals; check each
        # marginal against diag(eta^2) instead of cross-input agreement.
        report = verify_phase_masking(spec.inputs, tol=spec.tol)
        return ScenarioResult(
            name=spec.name,
            family=spec.family,
            verdict=report.verdict,
            max_probability_deviation=report.max_deviation,
            detail=f"marginal deviation {report.max_deviation:.2e}",
        )
    elif kinds == {QuditAmplitudes}:
        family = [mask_li_qudit(inp) for inp in spec.inputs]
    else:
        raise ScenarioFormatError(
            f"{spec.name}: masking inputs must all be of one kind"
        )
    particles = family[0].particles
    subsystems = [(i,) for i in range(1, particles + 1)]
    report = verify_masking(family, subsystems, tol=spec.tol)
    return ScenarioResult(
        name=spec.name,
        family=spec.family,
        verdict=report.verdict,
        max_probability_deviation=report.max_deviation,
        detail=f"marginal deviation {report.max_deviation:.2e}",
    )


def run_scenario(spec: ScenarioSpec) -> ScenarioResult:
    """Run one spec through its predictor(s) and the oracle."""
    try:
        if spec.family == "masking":
            return _run_masking(spec)
        if spec.family == "bell_bell":
            l1, l2 = spec.inputs
            scenario = bell_bell_scenario(l1, l2)
            predictions = [predict_bell_bell(l1, l2)]
        elif spec.family == "cat_swap":
            k = spec.params.get("k")
            if k is None:
                raise ScenarioFormatError(f"{spec.name}: params.k is required")
            scenario = cat_swap_scenario(spec.inputs, k)
            predictions = [predict_cat_swap(spec.inputs, k)]
        elif spec.family == "cat_bell":
            k = spec.params.get("k")
            if k is None:
                raise ScenarioFormatError(f"{spec.name}: params.k is required")
            cat_label, bell_label = spec.inputs
            scenario = cat_bell_scenario(cat_label, bell_label, int(k))
            predictions = [
                predict_cat_bell_karimipour(cat_label, bell_label, int(k)),
                predict_cat_bell_clear(cat_label, bell_label, int(k)),
            ]
        elif spec.family == "masked_ghz":
            scenario = masked_ghz_scenario(spec.inputs)
            predictions = [predict_masked_ghz_swap(spec.inputs)]
        elif spec.family == "masked_qudit":
            scenario = masked_qudit_scenario(spec.inputs)
            predictions = [predict_masked_qudit_swap(spec.inputs)]
        elif spec.family == "li_masked":
            scenario = li_masked_scenario(spec.inputs)
            predictions = [predict_li_masked_swap(spec.inputs)]
        else:
            raise ScenarioFormatError(f"{spec.name}: unknown family {spec.family}")
        oracle = simulate_swap(scenario)
        reports = [compare(p, oracle, tol=spec.tol) for p in predictions]
        if len(predictions) > 1:
            # The alternative closed forms must also agree with each other.
            reports.append(
                compare_distributions(predictions[0], predictions[1], tol=spec.tol)
            )
        return _result_from_comparison(spec, reports)
    except MaskSwapError as exc:
        return ScenarioResult(
            name=spec.name,
            family=spec.family,
            verdict=False,
            detail=f"{type(exc).__name__}: {exc}",
        )


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(
    specs: list[ScenarioSpec],
    tolerance: float = 1e-9,
    seed: int | None = None,
    workers: int | None = None,
) -> VerificationReport:
    """Run every spec and assemble a report; results stay in input order."""
    start = time.perf_counter()
    workers = worker_count() if workers is None else max(1, workers)
    if workers == 1:
        results = [run_scenario(s) for s in specs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_scenario, specs))
    runtime = time.perf_counter() - start
    families = {s.family for s in specs}
    return VerificationReport(
        scenarios=results,
        tolerance=tolerance,
        seed=seed,
        runtime_seconds=runtime,
        errata=[e.to_dict() for e in errata_for(families)],
    )
