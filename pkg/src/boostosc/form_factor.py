"""Breit-frame kinematics and the elastic form factor of a boosted ground state.

The momentum transfer in the Breit frame is purely spatial, (2p, 0), so the
form factor is the phase-weighted overlap of the incoming and outgoing boosted
wavefunctions.  The squeeze makes the overlap Gaussian shrink at exactly the
rate the phase wavelength does, which is why the closed form falls off
polynomially instead of exponentially.
"""

import math
from dataclasses import dataclass

import numpy as np

from .covariant_oscillator import CovariantState, evaluate_direct
from .errors import DomainError, ResolutionError
from .quadrature import integrate_2d

_LOG2 = math.log(2.0)


@dataclass(frozen=True)
class BreitKinematics:
    """Hadron momentum and mass in oscillator units, with the derived boost."""

    p: float
    m: float
    beta: float
    eta: float


def breit_frame(p, m):
    """Kinematics of a collision where the momentum reverses sign: beta = p/E."""
    if m <= 0.0:
        raise DomainError(f"mass must be positive, got {m!r}")
    beta = p / math.hypot(p, m)
    return BreitKinematics(float(p), float(m), beta, math.atanh(beta))


def _check_phase_resolution(omega, order):
    # Gauss-Hermite error for cos(omega x) e^(-x^2): N! sqrt(pi) omega^(2N) / (2^N (2N)!).
    if omega <= 1.0:
        return
    log_err = (
        math.lgamma(order + 1)
        + 0.5 * math.log(math.pi)
        + 2.0 * order * math.log(omega)
        - order * _LOG2
        - math.lgamma(2 * order + 1)
    )
    if log_err > math.log(1e-10):
        raise ResolutionError(
            f"phase frequency {omega:.3g} exceeds what an order-{order} rule resolves "
            "to 1e-10; raise the quadrature order"
        )


def form_factor_numeric(k, rule):
    """Phase-weighted overlap of the +eta and -eta ground states by quadrature.

    Integration runs in coordinates shrunk isotropically by 1/sqrt(cosh 2 eta),
    the width of the wavefunction product, so the Gaussian is always resolved;
    the remaining oscillation is rejected (never silently mis-integrated) if it
    beats the rule's resolution.  Only the cosine part is integrated: the sine
    part vanishes by the z -> -z symmetry of the ground-state product.
    """
    scale = 1.0 / math.sqrt(math.cosh(2.0 * k.eta))
    _check_phase_resolution(2.0 * abs(k.p) * scale, rule.order)
    incoming = CovariantState(0, k.eta)
    outgoing = CovariantState(0, -k.eta)

    def integrand(a, b):
        z = scale * a
        t = scale * b
        return (
            scale
            * scale
            * np.cos(2.0 * k.p * z)
            * evaluate_direct(incoming, z, t)
            * evaluate_direct(outgoing, z, t)
        )

    return integrate_2d(integrand, rule)


def form_factor_closed(k):
    """Closed form sech(2 eta) exp(-p^2 / cosh(2 eta)); equals 1 at p = 0."""
    c2 = math.cosh(2.0 * k.eta)
    return math.exp(-k.p**2 / c2) / c2


def static_form_factor(p):
    """Form factor with the squeeze switched off: the exponential cutoff e^(-p^2)."""
    return math.exp(-p * p)


def dipole_model(k):
    """Square of the closed form: the two-oscillator-mode cutoff heuristic.

    Illustrative only; its log-log slope approaches -4 at large momentum.
    """
    return form_factor_closed(k) ** 2
