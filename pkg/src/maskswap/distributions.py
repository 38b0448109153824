"""Outcome-distribution containers shared by the predictors and the oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .core import PROB_FLOOR, PureState
from .errors import BadScenario


@dataclass(frozen=True)
class PredictedOutcome:
    label: object
    coefficient: complex
    probability: float
    remainder: PureState
    remainder_label: object | None = None
    remainder_permutation: tuple[int, ...] | None = None


@dataclass(frozen=True)
class OutcomeDistribution:
    outcomes: tuple[PredictedOutcome, ...]
    provenance: str

    def __post_init__(self):
        labels = [o.label for o in self.outcomes]
        if len(set(labels)) != len(labels):
            raise BadScenario("duplicate outcome labels in distribution")
        total = sum(o.probability for o in self.outcomes)
        if abs(total - 1.0) > 1e-9:
            raise BadScenario(f"outcome probabilities sum to {total}, not 1")

    def probability_of(self, label) -> float:
        for o in self.outcomes:
            if o.label == label:
                return o.probability
        return 0.0

    def outcome(self, label) -> PredictedOutcome:
        for o in self.outcomes:
            if o.label == label:
                return o
        raise KeyError(label)


def finalize(raw, provenance: str) -> OutcomeDistribution:
    """Normalize coefficients into probabilities, dropping numerical zeros.

    ``raw`` entries: (label, coefficient, remainder, remainder_label, perm).
    """
    total = sum(abs(c) ** 2 for _, c, _, _, _ in raw)
    if total <= 0:
        raise BadScenario("all outcomes have zero coefficient")
    outcomes = []
    for label, coeff, remainder, rem_label, perm in raw:
        p = abs(coeff) ** 2 / total
        if p < PROB_FLOOR:
            continue
        outcomes.append(
            PredictedOutcome(
                label=label,
                coefficient=coeff,
                probability=p,
                remainder=remainder,
                remainder_label=rem_label,
                remainder_permutation=perm,
            )
        )
    return OutcomeDistribution(tuple(outcomes), provenance)
