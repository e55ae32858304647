"""Rotations, boosts as squeezes, light-cone coordinates, and the beta-eta dictionary.

All coordinates are dimensionless oscillator units (hbar = m = omega = c = 1);
positive rapidity boosts toward +z.
"""

import math
from dataclasses import dataclass

from .errors import DomainError

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SqueezeParameter:
    """Boost rapidity eta; the associated velocity is beta = tanh(eta)."""

    eta: float

    def __post_init__(self):
        if not math.isfinite(self.eta):
            raise DomainError(f"rapidity must be finite, got {self.eta!r}")

    @property
    def beta(self):
        return math.tanh(self.eta)

    @classmethod
    def from_beta(cls, beta):
        if not abs(beta) < 1.0:
            raise DomainError(f"velocity must satisfy |beta| < 1, got {beta!r}")
        return cls(math.atanh(beta))


def rapidity(s):
    """Accept a SqueezeParameter or a bare float rapidity; return the float."""
    if isinstance(s, SqueezeParameter):
        return s.eta
    eta = float(s)
    if not math.isfinite(eta):
        raise DomainError(f"rapidity must be finite, got {s!r}")
    return eta


@dataclass(frozen=True)
class SpaceTimePoint:
    z: float
    t: float


@dataclass(frozen=True)
class LightConePoint:
    u: float
    v: float


@dataclass(frozen=True)
class PlanePoint:
    x: float
    y: float


def rotate(p, theta):
    """Rotate a plane point by theta radians."""
    c, s = math.cos(theta), math.sin(theta)
    return PlanePoint(p.x * c - p.y * s, p.x * s + p.y * c)


def boost(p, s):
    """Boost a (z, t) point: the hyperbolic analog of a rotation."""
    eta = rapidity(s)
    ch, sh = math.cosh(eta), math.sinh(eta)
    return SpaceTimePoint(p.z * ch + p.t * sh, p.z * sh + p.t * ch)


def to_light_cone(p):
    """u = (z + t)/sqrt(2), v = (z - t)/sqrt(2)."""
    return LightConePoint((p.z + p.t) / _SQRT2, (p.z - p.t) / _SQRT2)


def from_light_cone(lc):
    """Inverse of ``to_light_cone``."""
    return SpaceTimePoint((lc.u + lc.v) / _SQRT2, (lc.u - lc.v) / _SQRT2)


def squeeze_light_cone(lc, s):
    """A boost acts diagonally on light-cone axes: (u, v) -> (e^eta u, e^-eta v)."""
    eta = rapidity(s)
    return LightConePoint(math.exp(eta) * lc.u, math.exp(-eta) * lc.v)


def beta_from_eta(s):
    """Velocity beta = tanh(eta)."""
    return math.tanh(rapidity(s))


def eta_from_beta(beta):
    """Rapidity from velocity; |beta| >= 1 is out of domain."""
    return SqueezeParameter.from_beta(beta)
