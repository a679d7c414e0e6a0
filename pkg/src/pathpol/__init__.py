"""Deterministic state-vector simulator of a two-source path/polarization
interference bench.

Two classical beams of distinct frequencies are split, polarization-rotated,
symmetrized into a 16-dimensional two-beam state, phase-tuned, and
recombined. The package computes intensity-intensity correlations along two
independent routes (operator expectations and closed-form expressions),
evaluates CHSH-type functionals of the resulting cosine law, and models the
single-detector readout including a time-domain autocorrelation demo.
"""

from .bench import (
    BenchState,
    PhaseSetting,
    SourceSpec,
    Stage,
    apply_bs_prime,
    build_sources,
    evolve_prestate,
    phase_diagonal,
    pipeline_trace,
    symmetrize,
    symmetrized_input,
)
from .contextuality import (
    CASE1_SETTING,
    MAX_VIOLATION,
    ChshSetting,
    ScanResult,
    c_bar,
    c_tilde,
    case2_setting,
    s_prime_value,
    s_value,
    scan_max,
)
from .correlations import (
    CorrelationReport,
    IntensityTerm,
    TermEntry,
    correlation_closed_form,
    correlation_numeric,
    correlation_report,
    fit_scaled_cosine,
    fit_sinusoid,
    g2_generalized,
    g2_hbt,
    intensity_term,
    sum_identity,
)
from .detector import (
    AaProjection,
    AutocorrelationReport,
    DetectionResult,
    TimeSeries,
    autocorrelation_demo,
    detect,
    detector_amplitudes,
    p45_intensity,
    project_aa,
)
from .elements import (
    ElementSpec,
    beam_splitter,
    element_matrix,
    inverse_prism,
    path_phase,
    pol_phase,
    pol_swap,
    polarizer_45,
    prism,
)
from .observables import (
    IntensityOperator,
    SigmaSpec,
    TransferCheckReport,
    expectation,
    intensity_operator,
    sigma,
    sigma_path,
    sigma_pol,
    transfer_check,
)
from .scenario import ConfigError, Scenario, SweepSpec, parse_scenario
from .tensor import (
    DIM,
    JonesVector,
    PolState,
    basis_index,
    basis_label,
    basis_state,
    embed,
    is_unitary,
    kron,
    make_pol_state,
)
from .verify import VerifyCheck, VerifyReport, format_report, run_verify

__version__ = "0.1.0"

__all__ = [
    "AaProjection",
    "AutocorrelationReport",
    "BenchState",
    "CASE1_SETTING",
    "ChshSetting",
    "ConfigError",
    "CorrelationReport",
    "DetectionResult",
    "DIM",
    "ElementSpec",
    "IntensityOperator",
    "IntensityTerm",
    "JonesVector",
    "MAX_VIOLATION",
    "PhaseSetting",
    "PolState",
    "ScanResult",
    "Scenario",
    "SigmaSpec",
    "SourceSpec",
    "Stage",
    "SweepSpec",
    "TermEntry",
    "TimeSeries",
    "TransferCheckReport",
    "VerifyCheck",
    "VerifyReport",
    "apply_bs_prime",
    "autocorrelation_demo",
    "basis_index",
    "basis_label",
    "basis_state",
    "beam_splitter",
    "build_sources",
    "c_bar",
    "c_tilde",
    "case2_setting",
    "correlation_closed_form",
    "correlation_numeric",
    "correlation_report",
    "detect",
    "detector_amplitudes",
    "element_matrix",
    "embed",
    "evolve_prestate",
    "expectation",
    "fit_scaled_cosine",
    "fit_sinusoid",
    "format_report",
    "g2_generalized",
    "g2_hbt",
    "intensity_operator",
    "intensity_term",
    "inverse_prism",
    "is_unitary",
    "kron",
    "make_pol_state",
    "p45_intensity",
    "parse_scenario",
    "path_phase",
    "phase_diagonal",
    "pipeline_trace",
    "pol_phase",
    "pol_swap",
    "polarizer_45",
    "prism",
    "project_aa",
    "run_verify",
    "s_prime_value",
    "s_value",
    "scan_max",
    "sigma",
    "sigma_path",
    "sigma_pol",
    "sum_identity",
    "symmetrize",
    "symmetrized_input",
    "transfer_check",
]
