"""The 2D Cartesian oscillator basis and coefficient-table machinery.

Localized functions are decomposed against products chi_{n_a}(a) chi_{n_b}(b)
by quadrature; the cylindrical and hyperbolic operators are diagonal on the
mode labels, so they act on coefficient tables without any stencils.
"""

import json
from dataclasses import dataclass
from typing import Dict, NamedTuple

import numpy as np

from .quadrature import evaluate_integrand
from .special_functions import check_mode_index, chi, chi_batch


class Mode2D(NamedTuple):
    """Pair of excitation numbers along the two Cartesian axes."""

    n_a: int
    n_b: int


@dataclass
class CoefficientTable:
    """Real amplitudes over 2D modes, with truncation metadata.

    ``discarded_weight`` is the squared norm that the truncation left out
    (analytic tail for series tables, quadrature deficit for decompositions).
    """

    entries: Dict[Mode2D, float]
    k_max: int
    discarded_weight: float

    def amplitude(self, n_a, n_b):
        return self.entries.get(Mode2D(n_a, n_b), 0.0)

    def norm_squared(self):
        return float(sum(a * a for a in self.entries.values()))

    def to_json(self):
        rows = [[m.n_a, m.n_b, a] for m, a in sorted(self.entries.items())]
        return json.dumps(
            {"kmax": self.k_max, "entries": rows, "discarded": self.discarded_weight}
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        entries = {Mode2D(int(na), int(nb)): float(a) for na, nb, a in data["entries"]}
        return cls(entries, int(data["kmax"]), float(data["discarded"]))


def chi2d(m, a, b):
    """Product eigenfunction chi_{n_a}(a) * chi_{n_b}(b)."""
    n_a, n_b = m
    return chi(n_a, a) * chi(n_b, b)


def decompose(f, k_max, rule):
    """Expand f(a, b) over all modes with n_a, n_b <= k_max.

    Amplitudes are tensor-product quadrature integrals of f against the basis;
    ``discarded_weight`` is max(0, |f|^2 - sum of squared amplitudes) with the
    squared norm itself taken by quadrature.
    """
    k_max = check_mode_index(k_max)
    x = rule.nodes
    sw = rule.scaled_weights
    ag, bg = np.meshgrid(x, x, indexing="ij")
    vals = evaluate_integrand(f, ag, bg)
    basis = chi_batch(k_max, x)
    weighted = vals * sw[:, None] * sw[None, :]
    amps = basis @ weighted @ basis.T
    norm_sq = float(sw @ (vals * vals) @ sw)
    captured = float(np.sum(amps * amps))
    entries = {
        Mode2D(na, nb): float(amps[na, nb])
        for na in range(k_max + 1)
        for nb in range(k_max + 1)
    }
    return CoefficientTable(entries, k_max, max(0.0, norm_sq - captured))


def reconstruct(table, a, b):
    """Sum the table against the basis at (a, b); scalars or arrays."""
    a_arr = np.asarray(a, dtype=float)
    b_arr = np.asarray(b, dtype=float)
    scalar = a_arr.ndim == 0 and b_arr.ndim == 0
    a_arr, b_arr = np.atleast_1d(a_arr), np.atleast_1d(b_arr)
    if not table.entries:
        out = np.zeros(np.broadcast(a_arr, b_arr).shape)
        return float(out) if scalar else out
    max_a = max(m.n_a for m in table.entries)
    max_b = max(m.n_b for m in table.entries)
    basis_a = chi_batch(max_a, a_arr)
    basis_b = chi_batch(max_b, b_arr)
    out = np.zeros(np.broadcast(a_arr, b_arr).shape)
    for m, amp in table.entries.items():
        out = out + amp * basis_a[m.n_a] * basis_b[m.n_b]
    return float(out[0]) if scalar else out


def apply_cylindrical(table):
    """Multiply each amplitude by its rotation-invariant eigenvalue n_a + n_b + 1."""
    entries = {m: amp * (m.n_a + m.n_b + 1) for m, amp in table.entries.items()}
    return CoefficientTable(entries, table.k_max, table.discarded_weight)


def apply_hyperbolic(table):
    """Multiply each amplitude by its squeeze-invariant eigenvalue n_a - n_b."""
    entries = {m: amp * (m.n_a - m.n_b) for m, amp in table.entries.items()}
    return CoefficientTable(entries, table.k_max, table.discarded_weight)
