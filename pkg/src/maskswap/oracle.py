"""Brute-force ground truth for swap scenarios.

The oracle knows nothing about closed forms: it tensors the scenario inputs,
projects onto every member of the measurement basis, and reports the
surviving (label, probability, remainder) triples.  This module must never
import coefficient logic from the predictors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import PROB_FLOOR, PureState, tensor
from .distributions import OutcomeDistribution, PredictedOutcome


@dataclass(frozen=True)
class OracleResult:
    distribution: OutcomeDistribution
    total_probability: float


def simulate_swap(scenario) -> OracleResult:
    """Exhaustive projection of the scenario state onto its basis."""
    state = tensor(scenario.states)
    d = state.level
    measured = scenario.measured
    measured.check_within(state.particles)
    basis = scenario.basis
    if basis.level != d or basis.particles != len(measured):
        raise ValueError("basis does not fit the measured particle set")

    # All outcome amplitudes in one matmul: rows are basis members, columns
    # enumerate the unmeasured particles in ascending order.
    t = state.reshaped()
    axes = [i - 1 for i in measured]
    rest = [i for i in range(state.particles) if i + 1 not in measured]
    block = np.transpose(t, axes + rest).reshape(d ** len(measured), -1)
    amplitudes = basis.matrix.conj() @ block

    probabilities = np.sum(np.abs(amplitudes) ** 2, axis=1)
    total = float(np.sum(probabilities))
    outcomes = []
    for (label, _), amp, prob in zip(basis.members, amplitudes, probabilities):
        prob = float(prob)
        if prob < PROB_FLOOR:
            continue
        remainder = PureState(d, amp / math.sqrt(prob))
        outcomes.append(
            PredictedOutcome(
                label=label,
                coefficient=math.sqrt(prob),
                probability=prob / total,
                remainder=remainder,
            )
        )
    return OracleResult(
        distribution=OutcomeDistribution(tuple(outcomes), "oracle"),
        total_probability=total,
    )


@dataclass(frozen=True)
class OutcomeComparison:
    label: object
    probability_predicted: float
    probability_oracle: float
    probability_deviation: float
    fidelity: float


@dataclass(frozen=True)
class ComparisonReport:
    verdict: bool
    max_probability_deviation: float
    min_fidelity: float
    missing_labels: tuple  # present in oracle, absent from prediction
    extra_labels: tuple  # predicted, absent from oracle
    outcomes: tuple[OutcomeComparison, ...]


def compare(
    predicted: OutcomeDistribution, oracle: OracleResult, tol: float = 1e-9
) -> ComparisonReport:
    """Match predicted outcomes against the oracle by label."""
    return compare_distributions(predicted, oracle.distribution, tol)


def compare_distributions(
    predicted: OutcomeDistribution, reference: OutcomeDistribution, tol: float = 1e-9
) -> ComparisonReport:
    """Match two outcome distributions by label."""
    oracle_by_label = {o.label: o for o in reference.outcomes}
    predicted_by_label = {o.label: o for o in predicted.outcomes}
    missing = tuple(
        label for label in oracle_by_label if label not in predicted_by_label
    )
    extra = tuple(
        label for label in predicted_by_label if label not in oracle_by_label
    )
    rows = []
    max_dev = 0.0
    min_fid = 1.0
    for label, pred in predicted_by_label.items():
        ref = oracle_by_label.get(label)
        if ref is None:
            continue
        dev = abs(pred.probability - ref.probability)
        fid = abs(
            np.vdot(pred.remainder.amplitudes, ref.remainder.amplitudes)
        )
        rows.append(
            OutcomeComparison(
                label=label,
                probability_predicted=pred.probability,
                probability_oracle=ref.probability,
                probability_deviation=dev,
                fidelity=float(fid),
            )
        )
        max_dev = max(max_dev, dev)
        min_fid = min(min_fid, float(fid))
    verdict = (
        not missing
        and not extra
        and max_dev <= tol
        and min_fid >= 1.0 - tol
    )
    return ComparisonReport(
        verdict=verdict,
        max_probability_deviation=max_dev,
        min_fidelity=min_fid,
        missing_labels=missing,
        extra_labels=extra,
        outcomes=tuple(rows),
    )
