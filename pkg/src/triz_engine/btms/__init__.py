"""Battery thermal case-study numerics: metrics, resistances, nodal model."""

from .assembly import (
    SimulationResult,
    build_network,
    simulate_discharge,
    sweep_contact_angle,
)
from .metrics import (
    MEASURED_HEAT_W,
    grouping_efficiency,
    heat_generation,
    pump_power,
    tabulated_heat_generation,
    tms_efficiency,
    volumetric_energy_density,
)
from .network import (
    ThermalNetwork,
    ThermalNode,
    run_network,
    stability_bound,
    step_network,
)
from .properties import WorkingFluidState, acetone_state, temperature_bin
from .resistance import (
    connection_resistance,
    heat_sink_resistance,
    phase_change_resistance,
    plane_resistance,
    radial_resistance,
    vapor_flow_resistance,
)
from .specs import (
    AssemblySpec,
    BatteryCellSpec,
    BoundarySpec,
    CoolantLoopSpec,
    FhpGeometry,
    ModuleGeometry,
    load_assembly,
)

__all__ = [
    "AssemblySpec",
    "BatteryCellSpec",
    "BoundarySpec",
    "CoolantLoopSpec",
    "FhpGeometry",
    "MEASURED_HEAT_W",
    "ModuleGeometry",
    "SimulationResult",
    "ThermalNetwork",
    "ThermalNode",
    "WorkingFluidState",
    "acetone_state",
    "build_network",
    "connection_resistance",
    "grouping_efficiency",
    "heat_generation",
    "heat_sink_resistance",
    "load_assembly",
    "phase_change_resistance",
    "plane_resistance",
    "pump_power",
    "radial_resistance",
    "run_network",
    "simulate_discharge",
    "stability_bound",
    "step_network",
    "sweep_contact_angle",
    "tabulated_heat_generation",
    "temperature_bin",
    "tms_efficiency",
    "vapor_flow_resistance",
    "volumetric_energy_density",
]
