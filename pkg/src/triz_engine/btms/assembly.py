"""Assemble and run the flat-heat-pipe battery module network.

Topology per cell: battery node -> (contact + wick-wrap resistance) ->
evaporator wick node -> (phase change + vapor flow + condenser stack) ->
condenser node -> (fin convection) -> fixed ambient.  Neighboring wick
segments also conduct axially.  The vapor path is treated as quasi-steady
resistance: its interfacial and flow resistances are orders of magnitude
below the conduction terms, and an explicit vapor node's tiny heat
capacity would force a microsecond step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from ..errors import AssemblyError, StabilityViolation
from .metrics import tabulated_heat_generation
from .network import CompiledNetwork, ThermalNetwork, ThermalNode
from .properties import acetone_state, temperature_bin
from .resistance import (
    connection_resistance,
    heat_sink_resistance,
    phase_change_resistance,
    plane_resistance,
    radial_resistance,
    vapor_flow_resistance,
)
from .specs import AssemblySpec

AMBIENT = "ambient"
CONDENSER = "condenser"

_REBIN_INTERVAL_S = 5.0
_DT_SAFETY = 0.4
_MAX_SAMPLES = 2400


def _battery_node_capacity(spec: AssemblySpec) -> float:
    g = spec.geometry
    cell = spec.cell
    volume = math.pi * cell.radius**2 * cell.height
    return g.battery_node_heat_capacity * g.battery_node_density * volume


def _wick_segment_capacity(spec: AssemblySpec) -> float:
    g = spec.geometry
    seg = g.width * g.evaporator_length
    shell = g.shell_thickness * seg * g.shell_density * g.shell_heat_capacity
    wick = g.wick_thickness * seg * g.wick_density * g.wick_heat_capacity
    return shell + wick

def _condenser_capacity(spec: AssemblySpec) -> float:
    g = spec.geometry
    area = g.width * g.condenser_length
    shell = 2 * g.shell_thickness * area * g.shell_density * g.shell_heat_capacity
    wick = 2 * g.wick_thickness * area * g.wick_density * g.wick_heat_capacity
    fin_volume = g.fin_count * g.fin_thickness * g.fin_width * g.width
    fins = fin_volume * g.shell_density * g.shell_heat_capacity
    return shell + wick + fins


def build_network(spec: AssemblySpec, c_rate: float,
                  vapor_temperature: float | None = None) -> ThermalNetwork:
    """Instantiate the nodal model for one discharge condition."""
    g = spec.geometry
    cell = spec.cell
    n = spec.resolved_n_cells()
    if n * g.evaporator_length > g.total_length - g.condenser_length + 1e-9:
        raise AssemblyError(
            f"{n} cells at {g.evaporator_length*1e3:.0f} mm pitch exceed the "
            f"{(g.total_length - g.condenser_length)*1e3:.0f} mm evaporator section")

    fluid = acetone_state(vapor_temperature if vapor_temperature is not None
                          else spec.initial_temperature,
                          accommodation=spec.fluid_accommodation)

    q_cell = tabulated_heat_generation(cell, c_rate) if c_rate > 0 else 0.0
    t0 = spec.initial_temperature

    nodes = []
    edges: dict[tuple[str, str], float] = {}

    # battery surface -> wick node: contact arc + conduction through the
    # conforming wick wrap
    r_contact = connection_resistance(g.shell_conductivity, cell.radius,
                                      cell.height, g.shell_thickness,
                                      g.contact_angle)
    r_wrap = radial_resistance(cell.radius + g.shell_thickness,
                               cell.radius + g.shell_thickness + g.wick_thickness,
                               g.wick_conductivity, g.contact_angle, cell.height)
    r_batt_wick = r_contact + r_wrap

    # evaporator wick -> condenser: phase change both ends, vapor duct in
    # between, then the condenser wick+shell stack
    a_evap = g.evaporator_area
    a_cond = g.condenser_area
    r_cond_stack = (phase_change_resistance(fluid, a_cond)
                    + plane_resistance(g.wick_thickness, g.wick_conductivity, a_cond)
                    + plane_resistance(g.shell_thickness, g.shell_conductivity, a_cond))
    r_pc_evap = phase_change_resistance(fluid, a_evap)

    r_axial = g.evaporator_length / (g.wick_conductivity
                                     * g.wick_thickness * g.width)

    c_batt = _battery_node_capacity(spec)
    c_wick = _wick_segment_capacity(spec)
    for i in range(1, n + 1):
        nodes.append(ThermalNode(f"batt{i}", c_batt, t0, source=q_cell))
        nodes.append(ThermalNode(f"wick{i}", c_wick, t0))
        edges[(f"batt{i}", f"wick{i}")] = r_batt_wick
        # vapor duct length from this segment's midpoint to the condenser
        duct = (n - i + 0.5) * g.evaporator_length + g.condenser_length / 2
        r_vapor = vapor_flow_resistance(fluid, g.vapor_thickness, duct,
                                        g.vapor_thickness * g.width)
        edges[(f"wick{i}", CONDENSER)] = r_pc_evap + r_vapor + r_cond_stack
        if i > 1:
            edges[(f"wick{i-1}", f"wick{i}")] = r_axial

    nodes.append(ThermalNode(CONDENSER, _condenser_capacity(spec), t0))
    nodes.append(ThermalNode(AMBIENT, 1.0, spec.boundary.ambient_temperature,
                             fixed=True))
    edges[(CONDENSER, AMBIENT)] = heat_sink_resistance(spec.boundary.h_fin,
                                                       g.fin_area)
    return ThermalNetwork(nodes=tuple(nodes), edges=edges)


@dataclass(frozen=True)
class SimulationResult:
    times: np.ndarray
    battery_temps: np.ndarray    # rows = samples, cols = cells, K
    node_names: list[str]
    all_temps: np.ndarray
    max_temp: float              # hottest cell temperature over the run, K
    final_max_temp: float        # hottest cell at end of discharge, K
    max_temp_diff: float         # widest cell-to-cell spread over the run, K

    def as_rows(self):
        for t, row in zip(self.times, self.battery_temps):
            yield [float(t)] + [float(x) for x in row]


def simulate_discharge(spec: AssemblySpec, c_rate: float,
                       duration: float | None = None,
                       dt: float | None = None) -> SimulationResult:
    """Integrate one constant-rate discharge.

    Defaults: duration is the full discharge (3600/c_rate seconds) and dt
    is 0.4x the explicit-Euler stability bound.  Fluid properties re-bin
    every few simulated seconds as the vapor warms.
    """
    if duration is None:
        if c_rate <= 0:
            raise ValueError("duration is required when c_rate is 0")
        duration = 3600.0 / c_rate
    net = build_network(spec, c_rate)
    compiled = CompiledNetwork(net)
    bound = compiled.stability_bound()
    if dt is None:
        dt = _DT_SAFETY * bound
    elif dt > bound:
        raise StabilityViolation(f"dt={dt} exceeds the explicit-Euler bound {bound:.6g}")

    names = compiled.names
    batt_cols = [i for i, name in enumerate(names) if name.startswith("batt")]
    cond_col = names.index(CONDENSER)

    n_steps = max(1, int(round(duration / dt)))
    sample_every = max(1, n_steps // _MAX_SAMPLES)
    rebin_every = max(1, int(round(_REBIN_INTERVAL_S / dt)))

    temps = compiled.temps.copy()
    current_bin = temperature_bin(temps[cond_col])
    times = [0.0]
    history = [temps.copy()]
    for step in range(1, n_steps + 1):
        temps = compiled.advance(temps, dt)
        if step % rebin_every == 0:
            new_bin = temperature_bin(temps[cond_col])
            if new_bin != current_bin:
                current_bin = new_bin
                net = build_network(spec, c_rate, vapor_temperature=new_bin)
                compiled = CompiledNetwork(net)
                if dt > compiled.stability_bound():
                    raise StabilityViolation(
                        "fluid re-binning tightened the stability bound below dt")
        if step % sample_every == 0 or step == n_steps:
            times.append(step * dt)
            history.append(temps.copy())

    all_temps = np.vstack(history)
    batt = all_temps[:, batt_cols]
    return SimulationResult(
        times=np.array(times),
        battery_temps=batt,
        node_names=names,
        all_temps=all_temps,
        max_temp=float(batt.max()),
        final_max_temp=float(batt[-1].max()),
        max_temp_diff=float((batt.max(axis=1) - batt.min(axis=1)).max()),
    )


def sweep_contact_angle(spec: AssemblySpec, thetas_rad: list[float],
                        c_rates: list[float], duration: float | None = None,
                        dt: float | None = None) -> list[dict]:
    """Full theta x C-rate grid of final maximum temperatures."""
    rows = []
    for c_rate in c_rates:
        for theta in thetas_rad:
            variant = replace(spec, geometry=spec.geometry.with_contact_angle(theta))
            result = simulate_discharge(variant, c_rate, duration=duration, dt=dt)
            rows.append({
                "theta_deg": round(math.degrees(theta), 9),
                "c_rate": c_rate,
                "final_max_temp_k": result.final_max_temp,
                "final_max_temp_c": result.final_max_temp - 273.15,
                "max_temp_diff_k": result.max_temp_diff,
            })
    return rows
