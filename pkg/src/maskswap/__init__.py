"""Qudit state-vector toolkit for quantum information masking and
entanglement swapping, with closed-form predictors verified against a
brute-force projective-measurement oracle."""

from .core import (
    DIMENSION_CAP,
    DensityMatrix,
    ParticleSet,
    PureState,
    equal_up_to_global_phase,
    flat_index,
    index_digits,
    inner_product,
    partial_trace,
    permute,
    project,
    tensor,
)
from .distributions import OutcomeDistribution, PredictedOutcome
from .errors import (
    BadLabel,
    BadScenario,
    BadSubset,
    DimensionTooLarge,
    LevelMismatch,
    MaskSwapError,
    NotNormalized,
    ScenarioFormatError,
    ShapeMismatch,
    ZeroProbabilityOutcome,
)
from .masking import (
    MaskingReport,
    PhaseAmplitudeInput,
    QuditAmplitudes,
    mask_li_qubit,
    mask_li_qudit,
    mask_modi_qubit,
    mask_modi_qudit,
    verify_masking,
    verify_phase_masking,
)
from .oracle import OracleResult, compare, compare_distributions, simulate_swap
from .scenarios import (
    SwapScenario,
    bell_bell_scenario,
    cat_bell_scenario,
    cat_swap_scenario,
    enumerate_scenarios,
    li_masked_scenario,
    load_scenarios,
    masked_ghz_scenario,
    masked_qudit_scenario,
)
from .states import (
    BasisSet,
    BellLabel,
    CatLabel,
    GhzLabel,
    MaxEntLabel,
    bell,
    bell_basis,
    cat,
    cat_basis,
    ghz_basis,
    ghz_member,
    max_entangled,
    max_entangled_basis,
)
from .swapping import (
    predict_bell_bell,
    predict_cat_bell_clear,
    predict_cat_bell_karimipour,
    predict_cat_swap,
    predict_li_masked_swap,
    predict_masked_ghz_swap,
    predict_masked_qudit_swap,
    to_state,
)

__version__ = "0.1.0"
