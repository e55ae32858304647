"""Two-mode squeezed photon states in the number basis.

The n-photon squeezed state carries amplitudes over kets |n+k, k> that are
numerically identical to the boosted-oscillator expansion amplitudes; photon
statistics of the unobserved second mode therefore reproduce the reduced
density spectrum, and the entanglement entropy equals the boost entropy.
"""

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .covariant_oscillator import boost_amplitudes
from .errors import DomainError, TruncationError
from .kinematics import rapidity
from .special_functions import N_MAX, check_mode_index, log_factorial


@dataclass(frozen=True)
class TwoModeState:
    """Amplitudes c_k over |n+k, k>, truncated with analytic tail accounting."""

    n: int
    eta: float
    amplitudes: np.ndarray
    tail: float

    def to_json(self):
        return json.dumps(
            {
                "n": self.n,
                "eta": self.eta,
                "c": [float(c) for c in self.amplitudes],
                "tail": self.tail,
            }
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(
            int(data["n"]),
            float(data["eta"]),
            np.asarray(data["c"], dtype=float),
            float(data["tail"]),
        )


@dataclass(frozen=True)
class CoherentState:
    """Poissonian amplitude sequence over |n> for a complex amplitude alpha."""

    alpha: complex
    amplitudes: np.ndarray
    tail: float


def coherent(alpha, tol):
    """Truncated coherent state: amplitudes e^(-|a|^2/2) a^n / sqrt(n!)."""
    if not 0.0 < tol < 1.0:
        raise DomainError(f"tolerance must lie in (0, 1), got {tol!r}")
    alpha = complex(alpha)
    if alpha == 0:
        return CoherentState(alpha, np.ones(1, dtype=complex), 0.0)
    mag2 = abs(alpha) ** 2
    log_mag = math.log(abs(alpha))
    phase = cmath.phase(alpha)
    amps = []
    total = 0.0
    n = 0
    while True:
        log_abs = -0.5 * mag2 + n * log_mag - 0.5 * log_factorial(n)
        amps.append(math.exp(log_abs) * cmath.exp(1j * n * phase))
        total += math.exp(2.0 * log_abs)
        tail = max(0.0, 1.0 - total)
        if tail < tol:
            return CoherentState(alpha, np.array(amps), tail)
        n += 1
        if n > N_MAX:
            raise TruncationError(
                f"coherent-state tail {tail:.3e} above tol={tol:.1e} at the mode ceiling"
            )


def squeezed_vacuum(s, tol):
    """Two-photon coherent state: geometric amplitudes tanh^k / cosh."""
    return n_photon_squeezed(0, s, tol)


def n_photon_squeezed(n, s, tol):
    """Squeeze applied to an n-photon seed in mode 1; amplitudes over |n+k, k>."""
    amps, tail = boost_amplitudes(check_mode_index(n), s, tol)
    return TwoModeState(n, rapidity(s), amps, tail)


def mode2_distribution(st):
    """Photon-number law of the unobserved mode: P(k) = c_k^2.

    This sequence is the reduced-density-matrix spectrum of the same (n, eta).
    """
    return st.amplitudes**2


def entanglement_entropy(st):
    """-sum P ln P over the mode-2 distribution (0 ln 0 = 0)."""
    p = mode2_distribution(st)
    pos = p[p > 0.0]
    return float(-np.sum(pos * np.log(pos)) + 0.0)
