"""Closed-form outcome predictors for entanglement swapping.

Each predictor expands the joint input state symbolically and emits, per
measurement outcome, the basis label, its unnormalized coefficient, and the
collapsed remainder state.  Remainders are always materialized in ascending
particle order so they compare directly against the brute-force oracle;
where the natural formula ordering interleaves particles, the predictor
records the applied permutation.

None of the predictors performs a projection: coefficients come from the
term structure of the closed forms alone, which keeps them independent of
the oracle they are checked against.
"""

from __future__ import annotations

import math
from itertools import product

import numpy as np

from .core import (
    DIMENSION_CAP,
    PROB_FLOOR,
    PureState,
    flat_index,
    permute,
)
from .distributions import (
    OutcomeDistribution,
    PredictedOutcome,
    finalize as _finalize,
)
from .errors import (
    BadLabel,
    BadScenario,
    DimensionTooLarge,
    LevelMismatch,
)
from .masking import PhaseAmplitudeInput, QuditAmplitudes, _pair_block
from .states import (
    BellLabel,
    CatLabel,
    GhzLabel,
    MaxEntLabel,
    bell,
    cat_remainder_state,
    max_entangled,
)


# ---------------------------------------------------------------------------
# Bell-Bell swapping (measurement on particles 1 and 3 in the Bell basis)
# ---------------------------------------------------------------------------

_PHI_P, _PHI_M = BellLabel(0, 0), BellLabel(1, 0)
_PSI_P, _PSI_M = BellLabel(0, 1), BellLabel(1, 1)

# Per (a1, a2) branch: bracket class -> [(measured, remainder, sign)], where
# the bracket classes are
#   0: 1 + (-1)^(lam1+lam2)      1: 1 - (-1)^(lam1+lam2)
#   2: (-1)^lam2 + (-1)^lam1     3: (-1)^lam2 - (-1)^lam1
_BELL_TABLE = {
    (0, 0): (
        [(_PHI_P, _PHI_P, 1), (_PHI_M, _PHI_M, 1)],
        [(_PHI_P, _PHI_M, 1), (_PHI_M, _PHI_P, 1)],
        [(_PSI_P, _PSI_P, 1), (_PSI_M, _PSI_M, 1)],
        [(_PSI_P, _PSI_M, 1), (_PSI_M, _PSI_P, 1)],
    ),
    (0, 1): (
        [(_PHI_P, _PSI_P, 1), (_PHI_M, _PSI_M, 1)],
        [(_PHI_P, _PSI_M, 1), (_PHI_M, _PSI_P, 1)],
        [(_PSI_P, _PHI_P, 1), (_PSI_M, _PHI_M, 1)],
        [(_PSI_P, _PHI_M, 1), (_PSI_M, _PHI_P, 1)],
    ),
    (1, 0): (
        [(_PHI_P, _PSI_P, 1), (_PHI_M, _PSI_M, -1)],
        [(_PHI_M, _PSI_P, 1), (_PHI_P, _PSI_M, -1)],
        [(_PSI_P, _PHI_P, 1), (_PSI_M, _PHI_M, -1)],
        [(_PSI_M, _PHI_P, 1), (_PSI_P, _PHI_M, -1)],
    ),
    (1, 1): (
        [(_PHI_P, _PHI_P, 1), (_PHI_M, _PHI_M, -1)],
        [(_PHI_M, _PHI_P, 1), (_PHI_P, _PHI_M, -1)],
        [(_PSI_P, _PSI_P, 1), (_PSI_M, _PSI_M, -1)],
        [(_PSI_M, _PSI_P, 1), (_PSI_P, _PSI_M, -1)],
    ),
}


def predict_bell_bell(l1: BellLabel, l2: BellLabel) -> OutcomeDistribution:
    """Swap two Bell states by a Bell measurement on particles (1, 3).

    The surviving outcomes and their signs follow the four-branch table
    selected by (a1, a2); remainders live on particles (2, 4), already in
    ascending order.
    """
    brackets = (
        1 + (-1) ** (l1.lam + l2.lam),
        1 - (-1) ** (l1.lam + l2.lam),
        (-1) ** l2.lam + (-1) ** l1.lam,
        (-1) ** l2.lam - (-1) ** l1.lam,
    )
    raw = []
    for bracket, entries in zip(brackets, _BELL_TABLE[(l1.a, l2.a)]):
        if bracket == 0:
            continue
        for measured, remainder, sign in entries:
            raw.append(
                (measured, bracket * sign, bell(remainder), remainder, (1, 2))
            )
    return _finalize(raw, "predict_bell_bell")


# ---------------------------------------------------------------------------
# Cat-state swapping (first k_r particles of each cat, cat basis)
# ---------------------------------------------------------------------------


def predict_cat_swap(labels, k) -> OutcomeDistribution:
    """Swap n cat states by measuring the first k_r particles of each.

    For every pattern of complemented input blocks (2^(n-1) classes, the
    representative leaving cat 1 uncomplemented), the measured and remainder
    bit strings pair into cat states with weights (s + s')/2 on equal-sign
    pairs and (s - s')/2 on mixed-sign pairs, where s is the pattern's sign
    and s' the sign of its global complement.
    """
    labels = list(labels)
    k = [int(x) for x in k]
    n = len(labels)
    if n < 2:
        raise BadScenario(f"need at least two cat states, got {n}")
    if len(k) != n:
        raise BadScenario("one measured count per cat state is required")
    for label, k_r in zip(labels, k):
        if label.m < 2:
            raise BadLabel(f"cat state needs m >= 2, got {label.m}")
        if not 1 <= k_r <= label.m:
            raise BadScenario(f"measured count {k_r} out of range for m={label.m}")
    big_k = sum(k)
    big_r = sum(label.m for label in labels) - big_k
    if big_k == 0 or big_r == 0:
        raise BadScenario("both the measured and remainder parts must be nonempty")

    lam_total = sum(label.lam for label in labels)
    scale = 2.0 ** (-n / 2.0)
    raw = []
    for pattern in product((0, 1), repeat=n - 1):
        flips = (0,) + pattern
        s = (-1) ** sum(c * label.lam for c, label in zip(flips, labels))
        s_conj = (-1) ** lam_total * s
        measured_bits = []
        remainder_bits = []
        for label, k_r, c in zip(labels, k, flips):
            bits = label.bits if c == 0 else tuple(1 - b for b in label.bits)
            measured_bits.extend(bits[:k_r])
            remainder_bits.extend(bits[k_r:])
        measured_bits = tuple(measured_bits)
        remainder_bits = tuple(remainder_bits)
        pairings = (
            (0, 0, (s + s_conj) // 2),
            (1, 1, (s + s_conj) // 2),
            (0, 1, (s - s_conj) // 2),
            (1, 0, (s - s_conj) // 2),
        )
        for lam_m, lam_r, weight in pairings:
            if weight == 0:
                continue
            m_label, m_phase = CatLabel(measured_bits, lam_m).canonical()
            r_label, r_phase = CatLabel(remainder_bits, lam_r).canonical()
            coeff = weight * m_phase * r_phase * scale
            raw.append(
                (
                    m_label,
                    coeff,
                    cat_remainder_state(r_label),
                    r_label,
                    tuple(range(1, big_r + 1)),
                )
            )
    return _finalize(raw, "predict_cat_swap")


# ---------------------------------------------------------------------------
# d-level cat + Bell swapping (two printed forms of the same double sum)
# ---------------------------------------------------------------------------


def _check_cat_bell_inputs(cat: MaxEntLabel, bl: MaxEntLabel, k: int) -> int:
    if cat.level != bl.level:
        raise LevelMismatch(f"levels differ: {cat.level} vs {bl.level}")
    if bl.m != 2:
        raise BadLabel(f"second input must be a 2-particle label, got m={bl.m}")
    m = cat.m
    if not 2 <= k <= m:
        raise BadScenario(
            f"measured cat particle k={k} must satisfy 2 <= k <= {m}; "
            "measuring the anchor particle is not covered by the closed form"
        )
    return m


def _cat_bell_remainder(
    cat: MaxEntLabel, k: int, anchor: int, slot_k: int
) -> tuple[MaxEntLabel, PureState, tuple[int, ...]]:
    """Remainder label with the anchor and slot-k offsets replaced, permuted
    from formula order (Bell partner sitting at slot k) to ascending order."""
    d, m = cat.level, cat.m
    args = list(cat.u)
    args[0] = anchor % d
    args[k - 1] = slot_k % d
    label = MaxEntLabel(d, tuple(args))
    order = tuple(range(1, k)) + tuple(range(k + 1, m + 1)) + (k,)
    state = permute(max_entangled(label), order)
    return label, state, order


def predict_cat_bell_karimipour(
    cat: MaxEntLabel, bl: MaxEntLabel, k: int
) -> OutcomeDistribution:
    """Double sum over (l1, l2) with coefficient zeta^(l1 l2)/d; the measured
    pair label is read off as (u1^2 - l2, u_k^1 - l1) mod d."""
    m = _check_cat_bell_inputs(cat, bl, k)
    d = cat.level
    zeta = np.exp(2j * np.pi / d)
    u1, u2 = cat.u, bl.u
    raw = []
    for l1, l2 in product(range(d), repeat=2):
        v = MaxEntLabel(d, ((u2[0] - l2) % d, (u1[k - 1] - l1) % d))
        coeff = zeta ** (l1 * l2) / d
        rem_label, rem_state, order = _cat_bell_remainder(
            cat, k, u1[0] + l2, u2[1] + l1
        )
        raw.append((v, coeff, rem_state, rem_label, order))
    return _finalize(raw, "predict_cat_bell_karimipour")


def predict_cat_bell_clear(
    cat: MaxEntLabel, bl: MaxEntLabel, k: int
) -> OutcomeDistribution:
    """Sum indexed directly by the measured label (v1, v2), with coefficient
    zeta^((u_k^1 - v2)(u1^2 - v1))/d."""
    m = _check_cat_bell_inputs(cat, bl, k)
    d = cat.level
    zeta = np.exp(2j * np.pi / d)
    u1, u2 = cat.u, bl.u
    raw = []
    for v1, v2 in product(range(d), repeat=2):
        v = MaxEntLabel(d, (v1, v2))
        coeff = zeta ** ((u1[k - 1] - v2) * (u2[0] - v1)) / d
        rem_label, rem_state, order = _cat_bell_remainder(
            cat, k, u1[0] + u2[0] - v1, u2[1] + u1[k - 1] - v2
        )
        raw.append((v, coeff, rem_state, rem_label, order))
    return _finalize(raw, "predict_cat_bell_clear")


# ---------------------------------------------------------------------------
# Swapping of masked states
# ---------------------------------------------------------------------------


def predict_masked_ghz_swap(lams) -> OutcomeDistribution:
    """Swap n masked bits (|00> + (-1)^lam_r |11>)/sqrt(2) by a GHZ-basis
    measurement on the first particle of each.

    Special case of the cat machinery with m_r = 2, k_r = 1, a_r = (0, 0);
    outcomes relabeled as GHZ pairs.  Only equal-sign pairs survive when
    sum(lam) is even, only mixed-sign pairs when it is odd.
    """
    lams = [int(x) for x in lams]
    n = len(lams)
    if n < 2:
        raise BadScenario(f"need at least two masked states, got {n}")
    base = predict_cat_swap([CatLabel((0, 0), lam) for lam in lams], [1] * n)

    def to_ghz(label: CatLabel) -> GhzLabel:
        return GhzLabel(len(label.bits), 1 if label.lam == 0 else -1, label.bits[1:])

    outcomes = tuple(
        PredictedOutcome(
            label=to_ghz(o.label),
            coefficient=o.coefficient,
            probability=o.probability,
            remainder=o.remainder,
            remainder_label=to_ghz(o.remainder_label),
            remainder_permutation=o.remainder_permutation,
        )
        for o in base.outcomes
    )
    return OutcomeDistribution(outcomes, "predict_masked_ghz_swap")


def predict_masked_qudit_swap(inputs, n: int | None = None) -> OutcomeDistribution:
    """Swap n masked qudits sum_a eta_a e^(i theta_a) |a, a> by measuring the
    first particle of each in the n-particle maximally entangled basis.

    For outcome (v1, ..., vn) the remainder superposes the anchor value t with
    weight zeta^(-t v1) prod_r eta^r_(t+v_r) e^(i theta^r_(t+v_r)) on the ket
    |t, t+v2, ..., t+vn>; the normalization constant is computed numerically.
    """
    inputs = list(inputs)
    if n is not None and n != len(inputs):
        raise BadScenario(f"expected {n} inputs, got {len(inputs)}")
    n = len(inputs)
    if n < 2:
        raise BadScenario(f"need at least two masked states, got {n}")
    d = inputs[0].level
    for inp in inputs:
        if inp.level != d:
            raise LevelMismatch(f"levels differ: {d} vs {inp.level}")
    zeta = np.exp(2j * np.pi / d)
    coeffs = [inp.coefficients() for inp in inputs]
    raw = []
    for v in product(range(d), repeat=n):
        weights = np.zeros(d, dtype=np.complex128)
        vec = np.zeros(d**n, dtype=np.complex128)
        for t in range(d):
            digits = (t,) + tuple((t + v[r]) % d for r in range(1, n))
            w = zeta ** (-t * v[0])
            for r in range(n):
                w *= coeffs[r][digits[r]]
            weights[t] = w
            vec[flat_index(d, digits)] = w
        norm = float(np.linalg.norm(weights))
        if norm**2 < PROB_FLOOR:
            continue
        raw.append(
            (
                MaxEntLabel(d, v),
                norm,
                PureState(d, vec / norm),
                None,
                tuple(range(1, n + 1)),
            )
        )
    return _finalize(raw, "predict_masked_qudit_swap")


def predict_li_masked_swap(inputs, n: int | None = None) -> OutcomeDistribution:
    """Swap n states masked on 2d particles each, measuring the first particle
    of every state in the n-particle maximally entangled basis.

    Outcome (v1, ..., vn) fixes each state's measured twin to t + v_r; the
    remainder sums phases zeta^(sum_r w^r k_r - t v1) over the free pair
    values and the masked index k_r, built here block by block.
    """
    inputs = list(inputs)
    if n is not None and n != len(inputs):
        raise BadScenario(f"expected {n} inputs, got {len(inputs)}")
    n = len(inputs)
    if n < 2:
        raise BadScenario(f"need at least two masked states, got {n}")
    d = inputs[0].level
    for inp in inputs:
        if inp.level != d:
            raise LevelMismatch(f"levels differ: {d} vs {inp.level}")
    if (d ** (2 * d)) ** n > DIMENSION_CAP:
        raise DimensionTooLarge(
            f"joint dimension {(d ** (2 * d)) ** n} exceeds cap {DIMENSION_CAP}"
        )
    zeta = np.exp(2j * np.pi / d)

    # Free-pair tail shared by every block with masked index k: (d-1) pairs.
    tails = []
    for kk in range(d):
        tail = np.ones(1, dtype=np.complex128)
        block = _pair_block(d, kk)
        for _ in range(d - 1):
            tail = np.kron(tail, block)
        tails.append(tail)

    def block_vector(alpha: QuditAmplitudes, twin: int) -> np.ndarray:
        """One state's remainder: twin particle fixed to ``twin``, followed by
        the d-1 untouched pairs, summed over the masked index."""
        out = np.zeros(d ** (2 * d - 1), dtype=np.complex128)
        anchor = np.zeros(d, dtype=np.complex128)
        for kk, a_k in enumerate(alpha.alpha):
            if a_k == 0:
                continue
            anchor[:] = 0
            anchor[twin] = a_k * zeta ** (twin * kk) / math.sqrt(d)
            out += np.kron(anchor, tails[kk])
        return out

    raw = []
    for v in product(range(d), repeat=n):
        rem = np.zeros(d ** ((2 * d - 1) * n), dtype=np.complex128)
        for t in range(d):
            piece = np.ones(1, dtype=np.complex128)
            for r in range(n):
                twin = t if r == 0 else (t + v[r]) % d
                piece = np.kron(piece, block_vector(inputs[r], twin))
            rem += zeta ** (-t * v[0]) * piece
        norm = float(np.linalg.norm(rem))
        if norm**2 < PROB_FLOOR:
            continue
        raw.append(
            (
                MaxEntLabel(d, v),
                norm,
                PureState(d, rem / norm),
                None,
                tuple(range(1, (2 * d - 1) * n + 1)),
            )
        )
    return _finalize(raw, "predict_li_masked_swap")


def to_state(outcome: PredictedOutcome, scenario) -> tuple[PureState, PureState]:
    """Materialize an outcome as (measured basis state, remainder state), both
    in ascending particle order for the given scenario."""
    measured = scenario.basis.member(outcome.label)
    return measured, outcome.remainder
