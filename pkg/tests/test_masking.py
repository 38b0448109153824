"""Maskers and the marginal-equality verifiers."""

import math

import numpy as np
import pytest

from maskswap import (
    BadLabel,
    DimensionTooLarge,
    PureState,
    bell,
    inner_product,
    partial_trace,
    tensor,
    verify_masking,
    verify_phase_masking,
)
from maskswap.masking import (
    PhaseAmplitudeInput,
    QuditAmplitudes,
    _pair_block,
    mask_li_qubit,
    mask_li_qudit,
    mask_modi_qubit,
    mask_modi_qudit,
)
from maskswap.states import PHI_MINUS, PHI_PLUS

RNG = np.random.default_rng(8361)


def random_phase_amplitude(d, rng=RNG):
    eta = np.abs(rng.standard_normal(d))
    eta /= np.linalg.norm(eta)
    theta = rng.uniform(-np.pi, np.pi, d)
    return PhaseAmplitudeInput(d, tuple(eta), tuple(theta))


def random_amplitudes(d, rng=RNG):
    alpha = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    alpha /= np.linalg.norm(alpha)
    return QuditAmplitudes(d, tuple(alpha))


# ---------------------------------------------------------------------------
# input validation
# ---------------------------------------------------------------------------


def test_phase_amplitude_input_validation():
    with pytest.raises(BadLabel):
        PhaseAmplitudeInput(2, (1.0, 0.0, 0.0), (0.0, 0.0, 0.0))
    with pytest.raises(BadLabel):
        PhaseAmplitudeInput(2, (-1.0, 0.0), (0.0, 0.0))
    with pytest.raises(BadLabel):
        PhaseAmplitudeInput(2, (1.0, 1.0), (0.0, 0.0))
    with pytest.raises(BadLabel):
        PhaseAmplitudeInput(2, (1.0, 0.0), (4.0, 0.0))


def test_qudit_amplitudes_validation():
    with pytest.raises(BadLabel):
        QuditAmplitudes(2, (1.0, 1.0))
    with pytest.raises(BadLabel):
        QuditAmplitudes(3, (1.0, 0.0))


# ---------------------------------------------------------------------------
# bit masker
# ---------------------------------------------------------------------------


def test_mask_modi_qubit_outputs():
    np.testing.assert_allclose(
        mask_modi_qubit(0).amplitudes, bell(PHI_PLUS).amplitudes
    )
    np.testing.assert_allclose(
        mask_modi_qubit(1).amplitudes, bell(PHI_MINUS).amplitudes
    )
    with pytest.raises(BadLabel):
        mask_modi_qubit(2)


def test_mask_modi_qubit_marginals_are_maximally_mixed():
    for l in (0, 1):
        for sub in ((1,), (2,)):
            rho = partial_trace(mask_modi_qubit(l), sub)
            np.testing.assert_allclose(rho.matrix, np.eye(2) / 2, atol=1e-12)


# ---------------------------------------------------------------------------
# phase-hiding qudit masker
# ---------------------------------------------------------------------------


def test_mask_modi_qudit_uniform_is_uniform_pair_correlation():
    d = 3
    inp = PhaseAmplitudeInput(d, (1 / math.sqrt(d),) * d, (0.0,) * d)
    masked = mask_modi_qudit(inp)
    expected = np.zeros(9)
    expected[0] = expected[4] = expected[8] = 1 / math.sqrt(3)
    np.testing.assert_allclose(masked.amplitudes, expected, atol=1e-15)


def test_mask_modi_qudit_marginals_are_eta_squared():
    for d in (2, 3, 5, 7):
        inp = random_phase_amplitude(d)
        masked = mask_modi_qudit(inp)
        expected = np.diag(np.array(inp.eta) ** 2)
        for sub in ((1,), (2,)):
            rho = partial_trace(masked, sub)
            np.testing.assert_allclose(rho.matrix, expected, atol=1e-12)


def test_mask_modi_qudit_uniform_marginal_is_maximally_mixed():
    d = 5
    inp = PhaseAmplitudeInput(
        d, (1 / math.sqrt(d),) * d, tuple(RNG.uniform(-np.pi, np.pi, d))
    )
    rho = partial_trace(mask_modi_qudit(inp), (1,))
    np.testing.assert_allclose(rho.matrix, np.eye(d) / d, atol=1e-12)


def test_verify_phase_masking_accepts_random_family():
    report = verify_phase_masking([random_phase_amplitude(4) for _ in range(10)])
    assert report.verdict
    assert report.max_deviation < 1e-12
    assert report.cross_subsystem_deviation < 1e-12


# ---------------------------------------------------------------------------
# full qudit masker
# ---------------------------------------------------------------------------


def test_mask_li_qubit_basis_inputs():
    phi_pp = tensor([bell(PHI_PLUS), bell(PHI_PLUS)])
    phi_mm = tensor([bell(PHI_MINUS), bell(PHI_MINUS)])
    np.testing.assert_allclose(
        mask_li_qubit(QuditAmplitudes(2, (1.0, 0.0))).amplitudes,
        phi_pp.amplitudes,
        atol=1e-15,
    )
    np.testing.assert_allclose(
        mask_li_qubit(QuditAmplitudes(2, (0.0, 1.0))).amplitudes,
        phi_mm.amplitudes,
        atol=1e-15,
    )


def test_mask_li_qubit_requires_level_two():
    with pytest.raises(BadLabel):
        mask_li_qubit(random_amplitudes(3))


def test_mask_li_qudit_basis_input_is_block_power():
    d = 3
    masked = mask_li_qudit(QuditAmplitudes(d, (0.0, 1.0, 0.0)))
    block = _pair_block(d, 1)
    expected = np.kron(np.kron(block, block), block)
    np.testing.assert_allclose(masked.amplitudes, expected, atol=1e-15)


def test_mask_li_qudit_marginals_are_maximally_mixed():
    for d in (2, 3):
        masked = mask_li_qudit(random_amplitudes(d))
        for p in range(1, 2 * d + 1):
            rho = partial_trace(masked, (p,))
            np.testing.assert_allclose(rho.matrix, np.eye(d) / d, atol=1e-12)


def test_mask_li_qudit_dimension_cap():
    alpha = np.zeros(5)
    alpha[0] = 1.0
    with pytest.raises(DimensionTooLarge):
        mask_li_qudit(QuditAmplitudes(5, tuple(alpha)))


# ---------------------------------------------------------------------------
# verifier
# ---------------------------------------------------------------------------


def test_verify_masking_accepts_bit_masker():
    family = [mask_modi_qubit(0), mask_modi_qubit(1)]
    report = verify_masking(family, [(1,), (2,)])
    assert report.verdict
    assert report.max_deviation == 0.0


def test_verify_masking_rejects_unmasked_encoding():
    family = [
        PureState.basis_state(2, (0, 0)),
        PureState.basis_state(2, (1, 1)),
    ]
    report = verify_masking(family, [(1,)])
    assert not report.verdict
    assert report.max_deviation == pytest.approx(1.0)


def test_verify_masking_accepts_li_family():
    for d in (2, 3):
        family = [mask_li_qudit(random_amplitudes(d)) for _ in range(8)]
        subsystems = [(p,) for p in range(1, 2 * d + 1)]
        report = verify_masking(family, subsystems)
        assert report.verdict
        assert report.max_deviation < 1e-12


def test_verify_masking_rejects_mismatched_shapes():
    from maskswap.errors import ShapeMismatch

    with pytest.raises(ShapeMismatch):
        verify_masking([mask_modi_qubit(0), mask_li_qubit(random_amplitudes(2))], [(1,)])
    with pytest.raises(ShapeMismatch):
        verify_masking([], [(1,)])


# ---------------------------------------------------------------------------
# isometry
# ---------------------------------------------------------------------------


def test_maskers_preserve_inner_products():
    # bit masker
    assert inner_product(mask_modi_qubit(0), mask_modi_qubit(1)) == pytest.approx(0.0)
    # phase-hiding masker: <M(x)|M(y)> = <x|y> for same-eta inputs and in general
    for d in (2, 3, 5):
        x, y = random_phase_amplitude(d), random_phase_amplitude(d)
        assert inner_product(
            mask_modi_qudit(x), mask_modi_qudit(y)
        ) == pytest.approx(inner_product(x.ket(), y.ket()), abs=1e-9)
    # full masker
    for d in (2, 3):
        x, y = random_amplitudes(d), random_amplitudes(d)
        assert inner_product(mask_li_qudit(x), mask_li_qudit(y)) == pytest.approx(
            inner_product(x.ket(), y.ket()), abs=1e-9
        )
