import math

import numpy as np
import pytest

from boostosc.errors import DomainError, ResolutionError
from boostosc.form_factor import (
    BreitKinematics,
    breit_frame,
    dipole_model,
    form_factor_closed,
    form_factor_numeric,
    static_form_factor,
)
from boostosc.quadrature import build_rule, integrate_1d

RULE = build_rule(128)


class TestBreitFrame:
    def test_at_rest(self):
        k = breit_frame(0.0, 1.0)
        assert k.beta == 0.0 and k.eta == 0.0

    def test_momentum_equals_mass(self):
        # frozen: beta = 1/sqrt(2), eta = atanh(1/sqrt(2)) = 0.8813735870195429
        k = breit_frame(2.5, 2.5)
        assert k.beta == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-15)
        assert k.eta == pytest.approx(0.8813735870195429, rel=1e-14)

    def test_rapidity_monotone_in_momentum(self):
        etas = [breit_frame(p, 1.0).eta for p in np.linspace(0.0, 10.0, 21)]
        assert all(a < b for a, b in zip(etas, etas[1:]))

    def test_rejects_nonpositive_mass(self):
        for m in (0.0, -1.0):
            with pytest.raises(DomainError):
                breit_frame(1.0, m)


class TestFormFactorNumeric:
    def test_unit_at_zero_momentum(self):
        got = form_factor_numeric(breit_frame(0.0, 1.0), RULE)
        assert got == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("p", [0.0, 0.5, 1.0, 2.0, 3.0, 4.0])
    def test_matches_closed_form(self, p):
        k = breit_frame(p, 1.0)
        assert form_factor_numeric(k, RULE) == pytest.approx(
            form_factor_closed(k), abs=1e-7
        )

    def test_intermediate_time_integration(self):
        # oracle: integrating the +eta/-eta product over t alone leaves
        # (1/sqrt(pi cosh 2eta)) e^(-z^2 cosh 2eta), checked pointwise
        from boostosc.covariant_oscillator import CovariantState, evaluate_direct

        eta = 0.9
        c2 = math.cosh(2 * eta)
        plus, minus = CovariantState(0, eta), CovariantState(0, -eta)
        for z in (0.0, 0.4, 1.0):
            got = integrate_1d(
                lambda t: evaluate_direct(plus, z, t) * evaluate_direct(minus, z, t),
                RULE,
            )
            expect = math.exp(-z * z * c2) / math.sqrt(math.pi * c2)
            assert got == pytest.approx(expect, abs=1e-12)

    def test_sine_part_vanishes_by_symmetry(self):
        from boostosc.covariant_oscillator import CovariantState, evaluate_direct
        from boostosc.quadrature import integrate_2d

        k = breit_frame(2.0, 1.0)
        scale = 1.0 / math.sqrt(math.cosh(2 * k.eta))
        plus, minus = CovariantState(0, k.eta), CovariantState(0, -k.eta)
        imag = integrate_2d(
            lambda a, b: scale**2
            * np.sin(2 * k.p * scale * a)
            * evaluate_direct(plus, scale * a, scale * b)
            * evaluate_direct(minus, scale * a, scale * b),
            RULE,
        )
        assert abs(imag) <= 1e-9

    def test_unresolvable_phase_is_rejected(self):
        # a hand-built kinematics point defeats the Breit-frame coherence
        # between phase and width, so the rule must refuse
        k = BreitKinematics(p=40.0, m=1.0, beta=0.0, eta=0.0)
        with pytest.raises(ResolutionError):
            form_factor_numeric(k, build_rule(32))


class TestFormFactorClosed:
    def test_unit_at_origin(self):
        assert form_factor_closed(breit_frame(0.0, 1.0)) == 1.0

    def test_large_momentum_polynomial_falloff(self):
        # the Gaussian saturates and sech(2 eta) supplies the 1/p^2 decay
        for p in (20.0, 50.0, 100.0):
            k = breit_frame(p, 1.0)
            assert form_factor_closed(k) * math.cosh(2 * k.eta) == pytest.approx(
                math.exp(-(p**2) / math.cosh(2 * k.eta)), rel=1e-12
            )
            assert math.exp(-(p**2) / math.cosh(2 * k.eta)) > 0.36

    def test_dominates_static_over_sech(self):
        for p in np.linspace(0.0, 6.0, 13):
            k = breit_frame(p, 1.0)
            assert form_factor_closed(k) >= static_form_factor(p) / math.cosh(
                2 * k.eta
            ) - 1e-15

    def test_bounded_and_monotone(self):
        vals = [
            form_factor_closed(breit_frame(p, 1.0)) for p in np.linspace(0.0, 8.0, 33)
        ]
        assert all(v <= 1.0 for v in vals)
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_squeeze_softens_the_cutoff(self):
        ratios = [
            form_factor_closed(breit_frame(p, 1.0)) / static_form_factor(p)
            for p in (1.0, 3.0, 6.0, 10.0)
        ]
        assert all(a < b for a, b in zip(ratios, ratios[1:]))
        assert ratios[-1] > 1e10


class TestStaticFormFactor:
    def test_values(self):
        assert static_form_factor(0.0) == 1.0
        assert static_form_factor(1.0) == pytest.approx(math.exp(-1.0), rel=1e-15)

    @pytest.mark.parametrize("p", [0.0, 0.7, 2.0, 4.0])
    def test_matches_quadrature_oracle(self, p):
        # oracle: (1/sqrt(pi)) integral cos(2pz) e^(-z^2) dz
        got = integrate_1d(
            lambda z: np.cos(2 * p * z) * np.exp(-z * z) / math.sqrt(math.pi), RULE
        )
        assert static_form_factor(p) == pytest.approx(got, abs=1e-10)


class TestDipoleModel:
    def test_unit_at_origin(self):
        assert dipole_model(breit_frame(0.0, 1.0)) == 1.0

    def test_equals_squared_closed_form(self):
        for p in np.linspace(0.0, 5.0, 11):
            k = breit_frame(p, 1.0)
            assert dipole_model(k) == form_factor_closed(k) ** 2

    def test_asymptotic_log_log_slope(self):
        ps = np.geomspace(20.0, 100.0, 25)
        vals = np.array([dipole_model(breit_frame(p, 1.0)) for p in ps])
        slope = np.polyfit(np.log(ps), np.log(vals), 1)[0]
        assert slope == pytest.approx(-4.0, abs=0.1)
