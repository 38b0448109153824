"""Dense complex linear algebra over multi-qudit Hilbert spaces.

Index convention is big-endian: the basis label (a1, ..., an) maps to the
flat index sum_i a_i * d**(n-i), so particle 1 is the most significant
digit.  All values are immutable after construction and every operation is
a pure function.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadSubset,
    DimensionTooLarge,
    LevelMismatch,
    NotNormalized,
    ShapeMismatch,
    ZeroProbabilityOutcome,
)

#: Hard cap on the total Hilbert-space dimension (dense storage only).
DIMENSION_CAP = 1 << 22

#: Tolerance for vector norms and entrywise comparisons.
NORM_TOL = 1e-9

#: Tolerance for the smallest eigenvalue of a reduced density matrix.
PSD_TOL = 1e-7

#: Probabilities below this threshold are treated as exact zeros.
PROB_FLOOR = 1e-12


def flat_index(level: int, digits: Sequence[int]) -> int:
    """Map a basis label (a1, ..., an) to its flat index."""
    idx = 0
    for a in digits:
        if not 0 <= a < level:
            raise ValueError(f"digit {a} out of range for level {level}")
        idx = idx * level + a
    return idx


def index_digits(level: int, particles: int, index: int) -> tuple[int, ...]:
    """Inverse of :func:`flat_index`."""
    if not 0 <= index < level**particles:
        raise ValueError(f"index {index} out of range")
    digits = []
    for _ in range(particles):
        index, a = divmod(index, level)
        digits.append(a)
    return tuple(reversed(digits))


class ParticleSet:
    """Ordered set of distinct 1-based particle positions."""

    __slots__ = ("indices",)

    def __init__(self, indices: Iterable[int]):
        if isinstance(indices, ParticleSet):
            self.indices = indices.indices
            return
        idx = tuple(sorted(int(i) for i in indices))
        if not idx:
            raise BadSubset("particle set is empty")
        if len(set(idx)) != len(idx):
            raise BadSubset(f"duplicate particle positions in {idx}")
        if idx[0] < 1:
            raise BadSubset(f"particle positions are 1-based, got {idx[0]}")
        self.indices = idx

    def check_within(self, particles: int) -> None:
        if self.indices[-1] > particles:
            raise BadSubset(
                f"position {self.indices[-1]} out of range for {particles} particles"
            )

    def complement(self, particles: int) -> tuple[int, ...]:
        inside = set(self.indices)
        return tuple(i for i in range(1, particles + 1) if i not in inside)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, item) -> bool:
        return item in self.indices

    def __eq__(self, other) -> bool:
        return isinstance(other, ParticleSet) and self.indices == other.indices

    def __hash__(self) -> int:
        return hash(self.indices)

    def __repr__(self) -> str:
        return f"ParticleSet({list(self.indices)})"


class PureState:
    """Normalized state vector of ``particles`` level-``level`` qudits."""

    __slots__ = ("level", "particles", "amplitudes")

    def __init__(self, level: int, amplitudes):
        level = int(level)
        if level < 2:
            raise ValueError(f"level must be >= 2, got {level}")
        amp = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        dim = amp.size
        if dim > DIMENSION_CAP:
            raise DimensionTooLarge(f"dimension {dim} exceeds cap {DIMENSION_CAP}")
        if dim < level:
            raise ValueError(f"amplitude vector of length {dim} holds no particle")
        particles = round(math.log(dim) / math.log(level))
        if level**particles != dim:
            raise ValueError(f"length {dim} is not a power of level {level}")
        if not np.all(np.isfinite(amp.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalized(f"norm {norm} deviates from 1 beyond {NORM_TOL}")
        amp.setflags(write=False)
        self.level = level
        self.particles = particles
        self.amplitudes = amp

    @classmethod
    def from_unnormalized(cls, level: int, amplitudes) -> "PureState":
        amp = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(amp)
        if norm**2 < PROB_FLOOR:
            raise NotNormalized("cannot normalize a (numerically) zero vector")
        return cls(level, amp / norm)

    @classmethod
    def basis_state(cls, level: int, digits: Sequence[int]) -> "PureState":
        digits = tuple(int(a) for a in digits)
        vec = np.zeros(level ** len(digits), dtype=np.complex128)
        vec[flat_index(level, digits)] = 1.0
        return cls(level, vec)

    @property
    def dimension(self) -> int:
        return self.amplitudes.size

    def reshaped(self) -> np.ndarray:
        """Read-only view with one axis per particle."""
        return self.amplitudes.reshape([self.level] * self.particles)

    def __repr__(self) -> str:
        return f"PureState(level={self.level}, particles={self.particles})"


class DensityMatrix:
    """Reduced state of a particle subset.

    Construction enforces hermiticity, unit trace, and positive
    semidefiniteness (smallest eigenvalue >= -1e-7).
    """

    __slots__ = ("level", "particles", "matrix")

    def __init__(self, level: int, matrix):
        level = int(level)
        mat = np.array(matrix, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"density matrix must be square, got {mat.shape}")
        dim = mat.shape[0]
        particles = round(math.log(dim) / math.log(level))
        if level**particles != dim or particles < 1:
            raise ValueError(f"side {dim} is not a power of level {level}")
        if np.max(np.abs(mat - mat.conj().T)) > NORM_TOL:
            raise ValueError("matrix is not Hermitian within tolerance")
        if abs(np.trace(mat).real - 1.0) > NORM_TOL:
            raise ValueError(f"trace {np.trace(mat)} deviates from 1")
        if np.min(np.linalg.eigvalsh(mat)) < -PSD_TOL:
            raise ValueError("matrix is not positive semidefinite within tolerance")
        mat.setflags(write=False)
        self.level = level
        self.particles = particles
        self.matrix = mat

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        return f"DensityMatrix(level={self.level}, particles={self.particles})"


def _check_same_shape(a: PureState, b: PureState) -> None:
    if a.level != b.level:
        raise LevelMismatch(f"levels differ: {a.level} vs {b.level}")
    if a.particles != b.particles:
        raise ShapeMismatch(f"particle counts differ: {a.particles} vs {b.particles}")


def tensor(parts: Sequence[PureState]) -> PureState:
    """Tensor product of the given states, in listed order."""
    parts = list(parts)
    if not parts:
        raise ValueError("tensor of zero states")
    level = parts[0].level
    dim = 1
    for p in parts:
        if p.level != level:
            raise LevelMismatch(f"levels differ: {level} vs {p.level}")
        dim *= p.dimension
        if dim > DIMENSION_CAP:
            raise DimensionTooLarge(f"dimension {dim} exceeds cap {DIMENSION_CAP}")
    vec = parts[0].amplitudes
    for p in parts[1:]:
        vec = np.kron(vec, p.amplitudes)
    return PureState(level, vec)


def inner_product(a: PureState, b: PureState) -> complex:
    """<a|b>; conjugate-linear in ``a``."""
    _check_same_shape(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def equal_up_to_global_phase(a: PureState, b: PureState, tol: float = NORM_TOL) -> bool:
    """True iff |<a|b>| >= 1 - tol."""
    _check_same_shape(a, b)
    return abs(np.vdot(a.amplitudes, b.amplitudes)) >= 1.0 - tol


def permute(state: PureState, order: Sequence[int]) -> PureState:
    """Reorder particles: new position i holds original particle order[i-1]."""
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(1, state.particles + 1)):
        raise BadSubset(f"{order} is not a permutation of 1..{state.particles}")
    t = state.reshaped().transpose([i - 1 for i in order])
    return PureState(state.level, np.ascontiguousarray(t).reshape(-1))


def partial_trace(state: PureState, keep) -> DensityMatrix:
    """Trace out everything except the particles in ``keep``."""
    keep = ParticleSet(keep)
    keep.check_within(state.particles)
    keep_axes = [i - 1 for i in keep]
    rest_axes = [i for i in range(state.particles) if i + 1 not in keep]
    t = state.reshaped()
    rho = np.tensordot(t, t.conj(), axes=(rest_axes, rest_axes))
    dim = state.level ** len(keep)
    return DensityMatrix(state.level, rho.reshape(dim, dim))


def projection_amplitudes(
    state: PureState, measured, basis_vector: PureState
) -> np.ndarray:
    """Unnormalized post-measurement amplitudes on the unmeasured particles.

    The result axes follow the unmeasured particles in ascending original
    order, flattened to a vector.
    """
    measured = ParticleSet(measured)
    measured.check_within(state.particles)
    if basis_vector.level != state.level:
        raise LevelMismatch(
            f"levels differ: {state.level} vs {basis_vector.level}"
        )
    if basis_vector.particles != len(measured):
        raise ShapeMismatch(
            f"basis vector covers {basis_vector.particles} particles, "
            f"measured set has {len(measured)}"
        )
    if len(measured) >= state.particles:
        raise BadSubset("at least one particle must remain unmeasured")
    t = state.reshaped()
    axes = [i - 1 for i in measured]
    bv = basis_vector.reshaped().conj()
    amp = np.tensordot(bv, t, axes=(list(range(len(measured))), axes))
    return amp.reshape(-1)


def project(
    state: PureState, measured, basis_vector: PureState
) -> tuple[float, PureState]:
    """Projective measurement outcome: (probability, renormalized remainder).

    Raises ZeroProbabilityOutcome when the probability is below 1e-12.
    """
    amp = projection_amplitudes(state, measured, basis_vector)
    prob = float(np.linalg.norm(amp) ** 2)
    if prob < PROB_FLOOR:
        raise ZeroProbabilityOutcome(f"outcome probability {prob} below {PROB_FLOOR}")
    remainder = PureState(state.level, amp / math.sqrt(prob))
    return prob, remainder
