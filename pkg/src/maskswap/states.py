"""Named entangled-state families and the measurement bases built from them.

Bell states are labeled (lam, a) with state (|0 a> + (-1)^lam |1 a~>)/sqrt(2).
Cat states generalize this to m qubits; GHZ labels are the canonical cat
labels (leading bit 0) used as a complete basis.  d-level maximally
entangled states are (1/sqrt d) sum_l zeta^(l u1) |l, l+u2, ..., l+um> with
zeta = exp(2 pi i / d) and addition mod d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .core import DIMENSION_CAP, PureState, flat_index
from .errors import BadLabel, DimensionTooLarge

_SQRT2_INV = 1.0 / math.sqrt(2.0)


def _check_bit(value: int, name: str) -> None:
    if value not in (0, 1):
        raise BadLabel(f"{name} must be 0 or 1, got {value!r}")


@dataclass(frozen=True)
class BellLabel:
    lam: int
    a: int

    def __post_init__(self):
        _check_bit(self.lam, "lam")
        _check_bit(self.a, "a")

    @property
    def name(self) -> str:
        kind = "phi" if self.a == 0 else "psi"
        return kind + ("+" if self.lam == 0 else "-")


PHI_PLUS = BellLabel(0, 0)
PHI_MINUS = BellLabel(1, 0)
PSI_PLUS = BellLabel(0, 1)
PSI_MINUS = BellLabel(1, 1)
BELL_LABELS = (PHI_PLUS, PHI_MINUS, PSI_PLUS, PSI_MINUS)


@dataclass(frozen=True)
class CatLabel:
    """m-qubit cat label: (|bits> + (-1)^lam |bits~>)/sqrt(2).

    The 1-qubit case is admitted so that swap remainders with a single
    unmeasured particle can be labeled; `cat()` itself requires m >= 2.
    """

    bits: tuple[int, ...]
    lam: int

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        for b in self.bits:
            _check_bit(b, "bit")
        _check_bit(self.lam, "lam")
        if not self.bits:
            raise BadLabel("cat label needs at least one bit")

    @property
    def m(self) -> int:
        return len(self.bits)

    def canonical(self) -> tuple["CatLabel", int]:
        """Equivalent label with leading bit 0 and the phase it picks up."""
        if self.bits[0] == 0:
            return self, 1
        flipped = tuple(1 - b for b in self.bits)
        return CatLabel(flipped, self.lam), (-1) ** self.lam


@dataclass(frozen=True)
class GhzLabel:
    """n-qubit GHZ-basis label: |0 a2..an> + sign |1 a2~..an~> (normalized)."""

    n: int
    sign: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(b) for b in self.a))
        if self.n < 2:
            raise BadLabel(f"GHZ label needs n >= 2, got {self.n}")
        if self.sign not in (1, -1):
            raise BadLabel(f"sign must be +1 or -1, got {self.sign!r}")
        if len(self.a) != self.n - 1:
            raise BadLabel(f"expected {self.n - 1} trailing bits, got {len(self.a)}")
        for b in self.a:
            _check_bit(b, "bit")

    @property
    def index(self) -> int:
        """Integer index sum_i a_i 2^(n-i) over positions 2..n."""
        return int("".join(map(str, self.a)), 2) if self.a else 0


@dataclass(frozen=True)
class MaxEntLabel:
    """d-level maximally entangled state label; entries reduced mod d."""

    level: int
    u: tuple[int, ...]

    def __post_init__(self):
        if self.level < 2:
            raise BadLabel(f"level must be >= 2, got {self.level}")
        if not self.u:
            raise BadLabel("label needs at least one entry")
        object.__setattr__(self, "u", tuple(int(x) % self.level for x in self.u))

    @property
    def m(self) -> int:
        return len(self.u)


class BasisSet:
    """Complete orthonormal measurement basis over k level-d particles."""

    __slots__ = ("level", "particles", "members", "_by_label", "_matrix")

    def __init__(self, level: int, particles: int, members):
        members = tuple(members)
        if len(members) != level**particles:
            raise BadLabel(
                f"basis has {len(members)} members, expected {level**particles}"
            )
        matrix = np.stack([state.amplitudes for _, state in members])
        gram = matrix @ matrix.conj().T
        deviation = np.max(np.abs(gram - np.eye(len(members))))
        if deviation > 1e-9:
            raise BadLabel(f"basis is not orthonormal (Gram deviation {deviation})")
        matrix.setflags(write=False)
        self.level = level
        self.particles = particles
        self.members = members
        self._by_label = {label: state for label, state in members}
        self._matrix = matrix

    @property
    def matrix(self) -> np.ndarray:
        """Members stacked as rows, in listed order."""
        return self._matrix

    def member(self, label) -> PureState:
        return self._by_label[label]

    @property
    def labels(self) -> tuple:
        return tuple(label for label, _ in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def gram_deviation(self) -> float:
        gram = self._matrix @ self._matrix.conj().T
        return float(np.max(np.abs(gram - np.eye(len(self.members)))))


def bell(label: BellLabel) -> PureState:
    vec = np.zeros(4, dtype=np.complex128)
    vec[flat_index(2, (0, label.a))] = _SQRT2_INV
    vec[flat_index(2, (1, 1 - label.a))] = (-1) ** label.lam * _SQRT2_INV
    return PureState(2, vec)


def _cat_vector(bits: tuple[int, ...], lam: int) -> np.ndarray:
    vec = np.zeros(2 ** len(bits), dtype=np.complex128)
    vec[flat_index(2, bits)] += _SQRT2_INV
    vec[flat_index(2, tuple(1 - b for b in bits))] += (-1) ** lam * _SQRT2_INV
    return vec


def cat(label: CatLabel) -> PureState:
    if label.m < 2:
        raise BadLabel(f"cat state needs m >= 2, got {label.m}")
    return PureState(2, _cat_vector(label.bits, label.lam))


def cat_remainder_state(label: CatLabel) -> PureState:
    """Materialize a cat label of any size, including the 1-qubit remainder."""
    return PureState(2, _cat_vector(label.bits, label.lam))


def ghz_member(label: GhzLabel) -> PureState:
    lam = 0 if label.sign == 1 else 1
    return PureState(2, _cat_vector((0,) + label.a, lam))


@lru_cache(maxsize=None)
def ghz_basis(n: int) -> BasisSet:
    """The 2^n GHZ states as a complete orthonormal n-qubit basis."""
    if n < 2:
        raise BadLabel(f"GHZ basis needs n >= 2, got {n}")
    members = []
    for a in product((0, 1), repeat=n - 1):
        for sign in (1, -1):
            label = GhzLabel(n, sign, a)
            members.append((label, ghz_member(label)))
    return BasisSet(2, n, members)


@lru_cache(maxsize=None)
def cat_basis(m: int) -> BasisSet:
    """Same basis as ghz_basis, labeled with canonical cat labels."""
    if m < 2:
        raise BadLabel(f"cat basis needs m >= 2, got {m}")
    members = []
    for tail in product((0, 1), repeat=m - 1):
        for lam in (0, 1):
            label = CatLabel((0,) + tail, lam)
            members.append((label, cat(label)))
    return BasisSet(2, m, members)


@lru_cache(maxsize=None)
def bell_basis() -> BasisSet:
    return BasisSet(2, 2, [(label, bell(label)) for label in BELL_LABELS])


def max_entangled(label: MaxEntLabel) -> PureState:
    d, u = label.level, label.u
    m = label.m
    if d**m > DIMENSION_CAP:
        raise DimensionTooLarge(f"dimension {d**m} exceeds cap {DIMENSION_CAP}")
    zeta = np.exp(2j * np.pi / d)
    vec = np.zeros(d**m, dtype=np.complex128)
    scale = 1.0 / math.sqrt(d)
    for l in range(d):
        digits = (l,) + tuple((l + u[i]) % d for i in range(1, m))
        vec[flat_index(d, digits)] = scale * zeta ** (l * u[0])
    return PureState(d, vec)


@lru_cache(maxsize=None)
def max_entangled_basis(d: int, m: int) -> BasisSet:
    """All d^m maximally entangled labels as a complete orthonormal basis."""
    if d < 2 or m < 1:
        raise BadLabel(f"need d >= 2 and m >= 1, got d={d}, m={m}")
    if d**m > DIMENSION_CAP:
        raise DimensionTooLarge(f"dimension {d**m} exceeds cap {DIMENSION_CAP}")
    members = []
    for u in product(range(d), repeat=m):
        label = MaxEntLabel(d, u)
        members.append((label, max_entangled(label)))
    return BasisSet(d, m, members)
