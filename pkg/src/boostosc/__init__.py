"""Squeeze-boosted harmonic oscillators: states, spectra, photon statistics, form factors."""

from .errors import (
    DomainError,
    EvaluationError,
    OscillatorError,
    ResolutionError,
    TruncationError,
)
from .kinematics import (
    LightConePoint,
    PlanePoint,
    SpaceTimePoint,
    SqueezeParameter,
    beta_from_eta,
    boost,
    eta_from_beta,
    from_light_cone,
    rotate,
    squeeze_light_cone,
    to_light_cone,
)
from .quadrature import QuadratureRule, build_rule, integrate_1d, integrate_2d
from .special_functions import (
    N_MAX,
    chi,
    chi_batch,
    hermite,
    log_factorial,
    sqrt_binomial_ratio,
)
from .oscillator_basis import (
    CoefficientTable,
    Mode2D,
    apply_cylindrical,
    apply_hyperbolic,
    chi2d,
    decompose,
    reconstruct,
)
from .covariant_oscillator import (
    CovariantState,
    boost_amplitudes,
    contraction_law,
    cylindrical_expectation,
    evaluate_direct,
    evaluate_series,
    overlap,
    series_coefficients,
)
from .density_matrix import (
    DensitySpectrum,
    effective_temperature,
    entropy,
    entropy_vs_velocity,
    ground_density_kernel,
    parton_distribution,
    purity,
    reduced_spectrum,
    wigner,
)
from .two_mode_squeezed import (
    CoherentState,
    TwoModeState,
    coherent,
    entanglement_entropy,
    mode2_distribution,
    n_photon_squeezed,
    squeezed_vacuum,
)
from .form_factor import (
    BreitKinematics,
    breit_frame,
    dipole_model,
    form_factor_closed,
    form_factor_numeric,
    static_form_factor,
)

__version__ = "0.1.0"
