"""Reduced density matrices of boosted states and everything they carry.

Tracing the unobserved time-separation variable out of a boosted state leaves
a diagonal spectrum lambda_k = c_k^2 over the rest-frame modes.  Purity,
entropy, the parton profile, the Wigner function and the Boltzmann-factor
temperature all follow from it; closed forms exist for the ground state and
are kept as cross-checks, never as the computation route.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .covariant_oscillator import boost_amplitudes
from .errors import DomainError
from .kinematics import eta_from_beta, rapidity
from .special_functions import check_mode_index


@dataclass(frozen=True)
class DensitySpectrum:
    """Eigenvalues of a reduced density matrix, with the truncated tail."""

    n: int
    eta: float
    eigenvalues: np.ndarray
    tail: float

    def to_json(self):
        return json.dumps(
            {
                "n": self.n,
                "eta": self.eta,
                "lambda": [float(v) for v in self.eigenvalues],
                "tail": self.tail,
            }
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(
            int(data["n"]),
            float(data["eta"]),
            np.asarray(data["lambda"], dtype=float),
            float(data["tail"]),
        )


def reduced_spectrum(n, s, tol):
    """Spectrum lambda_k = sech^(2(n+1)) (n+k choose k) tanh^(2k), truncated at tol."""
    amps, tail = boost_amplitudes(n, s, tol)
    return DensitySpectrum(check_mode_index(n), rapidity(s), amps * amps, tail)


def purity(n, s, tol):
    """Tr(rho^2): sum of squared eigenvalues, exactly 1 only at eta = 0."""
    spec = reduced_spectrum(n, s, tol)
    return float(np.sum(spec.eigenvalues**2))


def entropy(n, s, tol):
    """von Neumann entropy -sum(lambda ln lambda), with 0 ln 0 = 0."""
    lam = reduced_spectrum(n, s, tol).eigenvalues
    pos = lam[lam > 0.0]
    return float(-np.sum(pos * np.log(pos)) + 0.0)


def entropy_vs_velocity(n, beta, tol):
    """Entropy parameterized by velocity; computed through the spectral route."""
    return entropy(n, eta_from_beta(beta), tol)


def ground_density_kernel(s, z, zp):
    """Closed-form reduced kernel rho(z, z') of the boosted ground state."""
    c2 = math.cosh(2.0 * rapidity(s))
    z = np.asarray(z, dtype=float)
    zp = np.asarray(zp, dtype=float)
    out = (1.0 / (math.pi * c2)) ** 0.5 * np.exp(
        -0.25 * ((z + zp) ** 2 / c2 + (z - zp) ** 2 * c2)
    )
    return float(out) if out.ndim == 0 else out


def parton_distribution(s, z):
    """Diagonal rho(z, z): a Gaussian of variance cosh(2 eta)/2."""
    c2 = math.cosh(2.0 * rapidity(s))
    z = np.asarray(z, dtype=float)
    out = (1.0 / (math.pi * c2)) ** 0.5 * np.exp(-(z**2) / c2)
    return float(out) if out.ndim == 0 else out


def wigner(s, z, p):
    """Ground-state Wigner function: isotropic with 1/e radius sqrt(cosh 2 eta)."""
    c2 = math.cosh(2.0 * rapidity(s))
    z = np.asarray(z, dtype=float)
    p = np.asarray(p, dtype=float)
    out = np.exp(-(z**2 + p**2) / c2) / (math.pi * c2)
    return float(out) if out.ndim == 0 else out


def effective_temperature(s):
    """Temperature from identifying tanh^2(eta) with a Boltzmann factor.

    Defined so lambda_{k+1}/lambda_k = e^(-1/T) for the ground-state spectrum;
    only the ground state admits this thermal reading.
    """
    eta = rapidity(s)
    if eta == 0.0:
        raise DomainError("eta = 0 is the zero-temperature limit; no finite T")
    return -1.0 / math.log(math.tanh(eta) ** 2)
