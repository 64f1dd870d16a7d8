"""Thermal-resistance models for the conforming flat heat pipe, K/W.

The contact between the flat pipe and a cylindrical cell spans the sector
|phi| <= theta; conduction across that sector gives the connection and
radial terms.  Phase-change and vapor-flow terms follow the kinetic-theory
interfacial model and laminar channel flow.
"""

from __future__ import annotations

import math

from scipy.integrate import quad

from .properties import WorkingFluidState


def radial_resistance(r_in: float, r_out: float, k: float, half_angle: float,
                      axial_len: float) -> float:
    """Conduction through a cylindrical shell sector spanning 2*theta.

    Integral of dr/(k * 2 theta * r * L) from r_in to r_out, i.e.
    ln(r_out/r_in) / (2 theta k L).
    """
    if not 0 < r_in <= r_out:
        raise ValueError("need 0 < r_in <= r_out")
    if k <= 0 or half_angle <= 0 or axial_len <= 0:
        raise ValueError("conductivity, angle, and length must be positive")
    return math.log(r_out / r_in) / (2.0 * half_angle * k * axial_len)


def connection_conductance_integrand(phi: float, k_s: float, r_b: float,
                                     h_b: float, t_s: float) -> float:
    """Conductance density at angle phi: k_s r_b h_b / (t_s + r_b (1 - cos phi))."""
    return k_s * r_b * h_b / (t_s + r_b * (1.0 - math.cos(phi)))


def connection_resistance(k_s: float, r_b: float, h_b: float, t_s: float,
                          theta: float) -> float:
    """Battery-to-shell contact resistance over the sector [-theta, theta].

    1/R is the definite integral of the conductance density; evaluated by
    adaptive quadrature (no closed form needed).
    """
    if not 0 < theta <= math.pi / 2:
        raise ValueError("theta must be in (0, pi/2]")
    if min(k_s, r_b, h_b, t_s) <= 0:
        raise ValueError("all geometric and material inputs must be positive")
    conductance, _ = quad(connection_conductance_integrand, -theta, theta,
                          args=(k_s, r_b, h_b, t_s), limit=200)
    return 1.0 / conductance


def phase_change_resistance(fluid: WorkingFluidState, area: float) -> float:
    """Interfacial evaporation/condensation resistance.

    (2 - sigma) (2 pi R_gas T_v)^0.5 R_gas T_v^2 / (2 sigma A p_v H_fg^2).
    """
    if area <= 0:
        raise ValueError("area must be positive")
    sigma = fluid.accommodation
    t = fluid.vapor_temperature
    num = (2.0 - sigma) * math.sqrt(2.0 * math.pi * fluid.gas_constant * t) \
        * fluid.gas_constant * t**2
    den = 2.0 * sigma * area * fluid.vapor_pressure * fluid.latent_heat**2
    return num / den


def vapor_flow_resistance(fluid: WorkingFluidState, vapor_thickness: float,
                          length: float, area: float) -> float:
    """Saturated-vapor pressure-drop resistance of a channel segment.

    (R_gas T_v^2)/(p_v H_fg) * 12 mu_v /(t_v^2 rho_v A H_fg) * l; linear in
    length, inverse-square in channel thickness.
    """
    if min(vapor_thickness, length, area) <= 0:
        raise ValueError("vapor_thickness, length, and area must be positive")
    t = fluid.vapor_temperature
    clausius = fluid.gas_constant * t**2 / (fluid.vapor_pressure * fluid.latent_heat)
    poiseuille = 12.0 * fluid.vapor_viscosity / (
        vapor_thickness**2 * fluid.vapor_density * area * fluid.latent_heat)
    return clausius * poiseuille * length


def heat_sink_resistance(h_fin: float, a_fin: float) -> float:
    """Convective fin resistance, 1/(h A)."""
    if h_fin <= 0 or a_fin <= 0:
        raise ValueError("h_fin and a_fin must be positive")
    return 1.0 / (h_fin * a_fin)


def plane_resistance(thickness: float, k: float, area: float) -> float:
    """Plain slab conduction, t/(k A)."""
    if min(thickness, k, area) <= 0:
        raise ValueError("thickness, conductivity, and area must be positive")
    return thickness / (k * area)
