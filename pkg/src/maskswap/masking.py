"""Maskers mapping single-qudit states to entangled carriers, and the
marginal-equality verifier.

A masker hides the input in bipartite (or multipartite) correlations: every
subsystem marginal of the output must be independent of the masked input.
The verifier checks exactly that, by brute-force partial traces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import (
    DIMENSION_CAP,
    DensityMatrix,
    ParticleSet,
    PureState,
    flat_index,
    partial_trace,
)
from .errors import BadLabel, DimensionTooLarge, ShapeMismatch


@dataclass(frozen=True)
class PhaseAmplitudeInput:
    """Single-qudit input sum_l eta_l e^(i theta_l) |l> with eta_l >= 0."""

    level: int
    eta: tuple[float, ...]
    theta: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "eta", tuple(float(x) for x in self.eta))
        object.__setattr__(self, "theta", tuple(float(x) for x in self.theta))
        d = self.level
        if d < 2:
            raise BadLabel(f"level must be >= 2, got {d}")
        if len(self.eta) != d or len(self.theta) != d:
            raise BadLabel(f"eta and theta must both have length {d}")
        if any(x < 0 for x in self.eta):
            raise BadLabel("eta entries must be nonnegative")
        if any(abs(t) > math.pi + 1e-12 for t in self.theta):
            raise BadLabel("theta entries must lie in [-pi, pi]")
        if abs(sum(x * x for x in self.eta) - 1.0) > 1e-9:
            raise BadLabel("eta must satisfy sum eta_l^2 = 1")

    def coefficients(self) -> np.ndarray:
        return np.array(
            [e * np.exp(1j * t) for e, t in zip(self.eta, self.theta)],
            dtype=np.complex128,
        )

    def ket(self) -> PureState:
        return PureState(self.level, self.coefficients())


@dataclass(frozen=True)
class QuditAmplitudes:
    """Arbitrary normalized single-qudit amplitude vector."""

    level: int
    alpha: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(complex(x) for x in self.alpha))
        if self.level < 2:
            raise BadLabel(f"level must be >= 2, got {self.level}")
        if len(self.alpha) != self.level:
            raise BadLabel(f"alpha must have length {self.level}")
        if abs(sum(abs(x) ** 2 for x in self.alpha) - 1.0) > 1e-9:
            raise BadLabel("alpha must be a unit vector")

    def ket(self) -> PureState:
        return PureState(self.level, np.array(self.alpha, dtype=np.complex128))


def mask_modi_qubit(l: int) -> PureState:
    """|l> -> (|00> + (-1)^l |11>)/sqrt(2), l in {0, 1}."""
    if l not in (0, 1):
        raise BadLabel(f"input must be 0 or 1, got {l!r}")
    vec = np.zeros(4, dtype=np.complex128)
    vec[0] = 1.0 / math.sqrt(2.0)
    vec[3] = (-1) ** l / math.sqrt(2.0)
    return PureState(2, vec)


def mask_modi_qudit(inp: PhaseAmplitudeInput) -> PureState:
    """sum_l eta_l e^(i theta_l) |l> -> same coefficients on |l, l>."""
    d = inp.level
    coeff = inp.coefficients()
    vec = np.zeros(d * d, dtype=np.complex128)
    for l in range(d):
        vec[flat_index(d, (l, l))] = coeff[l]
    return PureState(d, vec)


def _pair_block(d: int, k: int) -> np.ndarray:
    """(1/sqrt d) sum_j zeta^(jk) |jj> as a d^2 amplitude vector."""
    zeta = np.exp(2j * np.pi / d)
    vec = np.zeros(d * d, dtype=np.complex128)
    for j in range(d):
        vec[flat_index(d, (j, j))] = zeta ** (j * k) / math.sqrt(d)
    return vec


def mask_li_qudit(alpha: QuditAmplitudes) -> PureState:
    """sum_k alpha_k |k> -> sum_k alpha_k (block_k)^(tensor d) on 2d particles,
    with block_k = (1/sqrt d) sum_j zeta^(jk) |jj>."""
    d = alpha.level
    if d ** (2 * d) > DIMENSION_CAP:
        raise DimensionTooLarge(
            f"masked dimension {d ** (2 * d)} exceeds cap {DIMENSION_CAP}"
        )
    total = np.zeros(d ** (2 * d), dtype=np.complex128)
    for k, a_k in enumerate(alpha.alpha):
        if a_k == 0:
            continue
        block = _pair_block(d, k)
        piece = block
        for _ in range(d - 1):
            piece = np.kron(piece, block)
        total += a_k * piece
    return PureState(d, total)


def mask_li_qubit(alpha: QuditAmplitudes) -> PureState:
    """Qubit special case of mask_li_qudit (4-particle output)."""
    if alpha.level != 2:
        raise BadLabel(f"qubit masker needs level 2, got {alpha.level}")
    return mask_li_qudit(alpha)


@dataclass
class MaskingReport:
    """Outcome of a marginal-equality check over a family of masked states."""

    subsystems: tuple[ParticleSet, ...]
    marginals: tuple[DensityMatrix, ...]  # representative (first member) per subsystem
    deviations: tuple[float, ...]  # max entrywise deviation across members
    max_deviation: float
    cross_subsystem_deviation: float | None  # marginal agreement between subsystems
    tolerance: float
    verdict: bool = field(init=False)

    def __post_init__(self):
        self.verdict = self.max_deviation <= self.tolerance


def verify_phase_masking(
    inputs: Sequence[PhaseAmplitudeInput], tol: float = 1e-9
) -> MaskingReport:
    """Check the phase-hiding masker: both single-particle marginals of each
    masked state must equal diag(eta^2), i.e. carry no phase information."""
    inputs = list(inputs)
    if not inputs:
        raise ShapeMismatch("empty family")
    family = [mask_modi_qudit(inp) for inp in inputs]
    subsystems = (ParticleSet((1,)), ParticleSet((2,)))
    representatives = []
    deviations = []
    cross = 0.0
    for sub in subsystems:
        dev = 0.0
        for inp, masked in zip(inputs, family):
            expected = np.diag(np.asarray(inp.eta, dtype=float) ** 2)
            mat = partial_trace(masked, sub).matrix
            dev = max(dev, float(np.max(np.abs(mat - expected))))
        representatives.append(partial_trace(family[0], sub))
        deviations.append(dev)
    for masked in family:
        a = partial_trace(masked, subsystems[0]).matrix
        b = partial_trace(masked, subsystems[1]).matrix
        cross = max(cross, float(np.max(np.abs(a - b))))
    return MaskingReport(
        subsystems=subsystems,
        marginals=tuple(representatives),
        deviations=tuple(deviations),
        max_deviation=max(deviations),
        cross_subsystem_deviation=cross,
        tolerance=tol,
    )


def verify_masking(
    family: Sequence[PureState], subsystems: Sequence, tol: float = 1e-9
) -> MaskingReport:
    """Check that each subsystem's marginal is identical across the family."""
    family = list(family)
    if not family:
        raise ShapeMismatch("empty family")
    first = family[0]
    for s in family[1:]:
        if s.level != first.level or s.particles != first.particles:
            raise ShapeMismatch("family members have mismatched shapes")
    subsystems = tuple(ParticleSet(s) for s in subsystems)
    representatives = []
    deviations = []
    per_subsystem_matrices = []
    for sub in subsystems:
        mats = [partial_trace(s, sub).matrix for s in family]
        dev = 0.0
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                dev = max(dev, float(np.max(np.abs(mats[i] - mats[j]))))
        representatives.append(partial_trace(first, sub))
        deviations.append(dev)
        per_subsystem_matrices.append(mats)
    cross = None
    same_dim = [
        mats for mats in per_subsystem_matrices
        if mats[0].shape == per_subsystem_matrices[0][0].shape
    ]
    if len(same_dim) == len(per_subsystem_matrices) and len(subsystems) > 1:
        cross = 0.0
        for member_idx in range(len(family)):
            base = per_subsystem_matrices[0][member_idx]
            for mats in per_subsystem_matrices[1:]:
                cross = max(cross, float(np.max(np.abs(mats[member_idx] - base))))
    return MaskingReport(
        subsystems=subsystems,
        marginals=tuple(representatives),
        deviations=tuple(deviations),
        max_deviation=max(deviations),
        cross_subsystem_deviation=cross,
        tolerance=tol,
    )
