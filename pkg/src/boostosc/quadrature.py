"""Deterministic Gauss-Hermite quadrature in one and two dimensions.

This module is the independent oracle for every closed form in the library:
the rules are built once by Golub-Welsch, symmetrized exactly, and applied to
integrands that carry their own Gaussian decay (the weights are re-scaled by
e^(+x^2) internally, so callers never fold the rule's weight function into
their integrand).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EvaluationError
from .special_functions import chi_batch

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for integrals against e^(-x^2) on the real line.

    ``scaled_weights`` are weights * e^(+nodes^2); they turn the rule into an
    approximation of a plain integral of a self-decaying integrand.
    """

    order: int
    nodes: np.ndarray
    weights: np.ndarray
    scaled_weights: np.ndarray


def build_rule(order):
    """Gauss-Hermite rule of the given order (1 <= order <= 256).

    Node seeds are the eigenvalues of the symmetric tridiagonal Jacobi matrix
    (Golub-Welsch), polished by Newton steps on the normalized recurrence.
    Weights come from 1/(order * chi_{order-1}(x_i)^2); unlike eigenvector
    components, that form keeps full relative accuracy at the extreme nodes,
    which the e^(+x^2) rescaling would otherwise amplify into garbage.  The
    arrays are symmetrized so the x -> -x pairing is exact, and the center
    node of an odd-order rule is exactly zero.
    """
    if order != int(order) or not 1 <= int(order) <= 256:
        raise DomainError(f"quadrature order must be an integer in [1, 256], got {order!r}")
    order = int(order)
    if order == 1:
        nodes = np.zeros(1)
    else:
        sub = np.sqrt(np.arange(1, order) / 2.0)
        nodes = np.linalg.eigvalsh(np.diag(sub, 1) + np.diag(sub, -1))
        for _ in range(2):
            basis = chi_batch(order, nodes)
            slope = math.sqrt(2.0 * order) * basis[order - 1] - nodes * basis[order]
            nodes = nodes - basis[order] / slope
        nodes = 0.5 * (nodes - nodes[::-1])
        if order % 2:
            nodes[order // 2] = 0.0
    chi_below = chi_batch(order - 1, nodes)[order - 1]
    scaled = 1.0 / (order * chi_below**2)
    weights = scaled * np.exp(-nodes * nodes)
    for arr in (nodes, weights, scaled):
        arr.setflags(write=False)
    return QuadratureRule(order, nodes, weights, scaled)


def evaluate_integrand(f, *coords):
    """Evaluate f on coordinate arrays, falling back to a scalar loop.

    Raises EvaluationError (carrying the offending node) on non-finite values.
    """
    shape = coords[0].shape
    try:
        vals = np.asarray(f(*coords), dtype=float)
        if vals.shape != shape:
            raise TypeError
    except EvaluationError:
        raise
    except Exception:
        flat = [c.ravel() for c in coords]
        vals = np.array([float(f(*pt)) for pt in zip(*flat)]).reshape(shape)
    if not np.all(np.isfinite(vals)):
        bad = tuple(float(c[~np.isfinite(vals)].flat[0]) for c in coords)
        node = bad[0] if len(bad) == 1 else bad
        raise EvaluationError(f"integrand is non-finite at node {node}", node=node)
    return vals


def integrate_1d(f, rule):
    """Approximate the plain integral of f over the real line.

    f must contain its own Gaussian decay; the rule's weight function is
    divided out internally via the pre-scaled weights.
    """
    vals = evaluate_integrand(f, rule.nodes)
    return float(np.dot(rule.scaled_weights, vals))


def integrate_2d(f, rule, squeeze=0.0):
    """Tensor-product integral of f(z, t) over the plane.

    ``squeeze`` is an optional rapidity: when nonzero, the node grid is laid
    out in light-cone coordinates stretched by e^(+squeeze) along u and
    compressed by e^(-squeeze) along v (unit Jacobian), which keeps nodes
    inside the elliptic support of strongly boosted integrands.
    """
    x = rule.nodes
    if squeeze == 0.0:
        zg, tg = np.meshgrid(x, x, indexing="ij")
    else:
        u = math.exp(squeeze) * x
        v = math.exp(-squeeze) * x
        ug, vg = np.meshgrid(u, v, indexing="ij")
        zg = (ug + vg) / _SQRT2
        tg = (ug - vg) / _SQRT2
    vals = evaluate_integrand(f, zg, tg)
    w = rule.scaled_weights
    return float(w @ vals @ w)
