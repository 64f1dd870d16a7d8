import math

import numpy as np
import pytest

from triz_engine.btms import (
    acetone_state,
    connection_resistance,
    heat_sink_resistance,
    phase_change_resistance,
    radial_resistance,
    vapor_flow_resistance,
)
from triz_engine.btms.properties import WorkingFluidState
from triz_engine.btms.resistance import connection_conductance_integrand

ACETONE_300K = WorkingFluidState(
    vapor_temperature=300.0, vapor_pressure=33103.2, latent_heat=530627.0,
    vapor_viscosity=7.5e-6, vapor_density=0.7708)


class TestRadial:
    def test_zero_thickness_shell(self):
        assert radial_resistance(0.01, 0.01, 200.0, math.pi / 9, 0.07) == 0.0

    def test_doubling_angle_halves_resistance(self):
        r1 = radial_resistance(0.01, 0.012, 200.0, 0.2, 0.07)
        r2 = radial_resistance(0.01, 0.012, 200.0, 0.4, 0.07)
        assert r1 / r2 == pytest.approx(2.0, rel=1e-12)

    def test_quadrature_oracle(self):
        # numerical quadrature of dr/(k*2*theta*r*L) at the shell-wrap
        # parameters (frozen from a scipy.integrate.quad run)
        value = radial_resistance(10.85e-3, 11.85e-3, 200.0, math.pi / 9, 0.07)
        assert value == pytest.approx(0.009020277927291091, rel=1e-9)

    def test_monotone_in_conductivity_and_length(self):
        base = radial_resistance(0.01, 0.012, 100.0, 0.3, 0.07)
        assert radial_resistance(0.01, 0.012, 200.0, 0.3, 0.07) < base
        assert radial_resistance(0.01, 0.012, 100.0, 0.3, 0.14) < base


class TestConnection:
    ARGS = dict(k_s=205.0, r_b=10.85e-3, h_b=0.07, t_s=1.0e-3)

    def test_vanishing_contact_diverges(self):
        tiny = connection_resistance(theta=1e-6, **self.ARGS)
        normal = connection_resistance(theta=math.radians(20), **self.ARGS)
        assert tiny > 1e3 * normal

    def test_integrand_at_zero(self):
        # cos(0) = 1 collapses the gap term to t_s
        value = connection_conductance_integrand(0.0, 205.0, 10.85e-3, 0.07, 1e-3)
        assert value == pytest.approx(205.0 * 10.85e-3 * 0.07 / 1e-3, rel=1e-12)

    def test_midpoint_rule_oracle(self):
        # 1e6-point midpoint evaluation of the same integral
        theta = math.radians(20)
        n = 1_000_000
        phi = -theta + (np.arange(n) + 0.5) * (2 * theta / n)
        conductance = (self.ARGS["k_s"] * self.ARGS["r_b"] * self.ARGS["h_b"]
                       / (self.ARGS["t_s"]
                          + self.ARGS["r_b"] * (1 - np.cos(phi)))).sum() \
            * (2 * theta / n)
        oracle = 1.0 / conductance
        assert connection_resistance(theta=theta, **self.ARGS) \
            == pytest.approx(oracle, rel=1e-7)

    def test_monotone_decreasing_in_theta(self):
        values = [connection_resistance(theta=math.radians(d), **self.ARGS)
                  for d in (5, 10, 20, 30, 45)]
        assert values == sorted(values, reverse=True)


class TestPhaseChange:
    def test_doubling_area_halves(self):
        r1 = phase_change_resistance(ACETONE_300K, 1.0e-3)
        r2 = phase_change_resistance(ACETONE_300K, 2.0e-3)
        assert r1 / r2 == pytest.approx(2.0, rel=1e-12)

    def test_unity_accommodation_prefactor(self):
        # sigma = 1 makes (2 - sigma)/sigma = 1; halving sigma should scale
        # the resistance by (2-.5)/.5 / ((2-1)/1) = 3
        half = WorkingFluidState(
            vapor_temperature=300.0, vapor_pressure=33103.2,
            latent_heat=530627.0, vapor_viscosity=7.5e-6,
            vapor_density=0.7708, accommodation=0.5)
        ratio = (phase_change_resistance(half, 1e-3)
                 / phase_change_resistance(ACETONE_300K, 1e-3))
        assert ratio == pytest.approx(3.0, rel=1e-12)

    def test_substitution_oracle(self):
        # hand evaluation at the pinned 300 K acetone state, A = 1e-3 m^2
        value = phase_change_resistance(ACETONE_300K, 1.0e-3)
        assert value == pytest.approx(0.0003590433959575047, rel=1e-12)


class TestVaporFlow:
    def test_linear_in_length(self):
        r1 = vapor_flow_resistance(ACETONE_300K, 1.1e-3, 0.13, 7.7e-5)
        r2 = vapor_flow_resistance(ACETONE_300K, 1.1e-3, 0.26, 7.7e-5)
        assert r2 / r1 == pytest.approx(2.0, rel=1e-12)

    def test_thickness_square_law(self):
        r1 = vapor_flow_resistance(ACETONE_300K, 1.1e-3, 0.13, 7.7e-5)
        r2 = vapor_flow_resistance(ACETONE_300K, 2.2e-3, 0.13, 7.7e-5)
        assert r1 / r2 == pytest.approx(4.0, rel=1e-12)

    def test_substitution_oracle(self):
        value = vapor_flow_resistance(ACETONE_300K, 1.1e-3, 0.13, 7.7e-5)
        assert value == pytest.approx(0.00022520788526055697, rel=1e-12)


class TestHeatSink:
    def test_direct_substitution(self):
        assert heat_sink_resistance(50.0, 0.1) == pytest.approx(0.2, rel=1e-12)

    def test_monotone_decreasing_in_area(self):
        assert heat_sink_resistance(50.0, 10.0) < heat_sink_resistance(50.0, 0.1)

    def test_argument_symmetry(self):
        assert heat_sink_resistance(3.0, 7.0) == heat_sink_resistance(7.0, 3.0)


class TestProperties:
    def test_binning(self):
        from triz_engine.btms import temperature_bin
        assert temperature_bin(293.15) == 295.0
        assert temperature_bin(292.4) == 290.0
        assert temperature_bin(100.0) == 270.0   # clamped
        assert temperature_bin(500.0) == 370.0

    def test_state_positive(self):
        state = acetone_state(300.0)
        assert state.vapor_pressure > 0
        assert state.latent_heat > 0
        assert state.vapor_density > 0

    def test_pressure_increases_with_temperature(self):
        assert acetone_state(330.0).vapor_pressure > acetone_state(300.0).vapor_pressure
