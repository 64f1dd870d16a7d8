"""Component specifications for the battery module and flat heat pipe.

Numeric defaults describe the 21700-cell module with the conforming flat
heat pipe: cell data from the battery datasheet table, heat-pipe structure
from its parameter table.  All fields are SI; convenience constructors
convert the odd units (liters, Ah, degrees) at the boundary.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable


@dataclass(frozen=True)
class BatteryCellSpec:
    capacity_ah: float = 4.8
    nominal_voltage: float = 3.65
    mass: float = 0.069           # kg
    radius: float = 0.01085       # m
    height: float = 0.070         # m
    specific_heat: float = 920.0  # J/(kg K), cell-level value
    k_radial: float = 1.38        # W/(m K)
    k_axial: float = 32.52        # W/(m K)
    # Internal resistance vs state of charge.  Default: constant value
    # back-solved from the 1C heat-generation row (0.76 W at 4.8 A).
    resistance_curve: Callable[[float], float] = field(
        default=lambda soc: 0.76 / 4.8**2)

    def __post_init__(self):
        for name in ("capacity_ah", "nominal_voltage", "mass", "radius", "height",
                     "specific_heat", "k_radial", "k_axial"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def energy_wh(self) -> float:
        return self.capacity_ah * self.nominal_voltage

    @property
    def volume(self) -> float:
        return math.pi * self.radius**2 * self.height


@dataclass(frozen=True)
class ModuleGeometry:
    v_batt_l: float     # total battery volume, liters
    v_module_l: float   # module volume incl. thermal management, liters
    e_batt_wh: float    # module energy content, Wh

    def __post_init__(self):
        if not 0 < self.v_batt_l <= self.v_module_l:
            raise ValueError("need 0 < v_batt <= v_module")
        if self.e_batt_wh <= 0:
            raise ValueError("e_batt must be positive")


@dataclass(frozen=True)
class CoolantLoopSpec:
    density: float        # kg/m^3
    flow_rate: float      # m^3/s
    channel_area: float   # m^2
    efficiency: float = 0.8

    def __post_init__(self):
        if self.density <= 0 or self.channel_area <= 0:
            raise ValueError("density and channel_area must be positive")
        if self.flow_rate < 0:
            raise ValueError("flow_rate must be >= 0")
        if not 0 < self.efficiency <= 1:
            raise ValueError("efficiency must be in (0, 1]")

    @classmethod
    def water_loop(cls, flow_l_per_min: float, area_cm2: float,
                   efficiency: float = 0.8) -> "CoolantLoopSpec":
        return cls(density=1000.0, flow_rate=flow_l_per_min / 60000.0,
                   channel_area=area_cm2 * 1e-4, efficiency=efficiency)


@dataclass(frozen=True)
class FhpGeometry:
    contact_angle: float = math.radians(20.0)  # theta, rad
    shell_thickness: float = 1.0e-3            # t_s, m
    wick_thickness: float = 1.1e-3             # t_w, m
    vapor_thickness: float = 1.1e-3            # t_v, m
    evaporator_length: float = 23.0e-3         # l_ei per cell, m
    condenser_length: float = 65.0e-3          # l_c, m
    width: float = 70.0e-3                     # w_FHP, m
    total_length: float = 260.0e-3             # l_FHP, m
    fin_thickness: float = 0.6e-3              # t_fin, m
    fin_width: float = 20.0e-3                 # w_fin, m
    fin_spacing: float = 3.0e-3                # s_fin, m
    wick_conductivity: float = 9.965           # k_w, W/(m K)
    wick_heat_capacity: float = 1059.0         # c_w, J/(kg K)
    wick_density: float = 1059.0               # rho_w, kg/m^3
    shell_conductivity: float = 205.0          # k_s, aluminum, W/(m K)
    shell_heat_capacity: float = 920.9         # c_s, J/(kg K)
    shell_density: float = 2700.0              # kg/m^3
    battery_node_heat_capacity: float = 1023.0  # c_b for network nodes, J/(kg K)
    battery_node_density: float = 2519.0       # rho_b, kg/m^3

    def __post_init__(self):
        if not 0 < self.contact_angle <= math.pi / 2:
            raise ValueError("contact angle must be in (0, pi/2]")
        for name in ("shell_thickness", "wick_thickness", "vapor_thickness",
                     "evaporator_length", "condenser_length", "width",
                     "total_length"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def evaporator_area(self) -> float:
        """Chamber footprint under one cell, l_ei x w."""
        return self.evaporator_length * self.width

    @property
    def condenser_area(self) -> float:
        return self.condenser_length * self.width

    @property
    def fin_count(self) -> int:
        return int(self.condenser_length // (self.fin_spacing + self.fin_thickness))

    @property
    def fin_area(self) -> float:
        """Both faces of every fin."""
        return self.fin_count * 2.0 * self.fin_width * self.width

    @property
    def cell_slots(self) -> int:
        """Cells along the evaporator section of one pipe."""
        return int((self.total_length - self.condenser_length)
                   // self.evaporator_length)

    def with_contact_angle(self, theta: float) -> "FhpGeometry":
        return replace(self, contact_angle=theta)


@dataclass(frozen=True)
class BoundarySpec:
    ambient_temperature: float = 293.15  # K
    h_fin: float = 60.0                  # fin heat-transfer coefficient, W/(m^2 K)

    def __post_init__(self):
        if self.ambient_temperature <= 0 or self.h_fin <= 0:
            raise ValueError("ambient_temperature and h_fin must be positive")


@dataclass(frozen=True)
class AssemblySpec:
    cell: BatteryCellSpec = field(default_factory=BatteryCellSpec)
    geometry: FhpGeometry = field(default_factory=FhpGeometry)
    boundary: BoundarySpec = field(default_factory=BoundarySpec)
    n_cells: int | None = None            # default: geometry.cell_slots
    initial_temperature: float = 293.15   # K
    fluid_accommodation: float = 1.0

    def resolved_n_cells(self) -> int:
        n = self.n_cells if self.n_cells is not None else self.geometry.cell_slots
        if n < 1:
            raise ValueError("assembly needs at least one cell")
        return n


def load_assembly(path: str | Path) -> AssemblySpec:
    """Read an assembly spec document (btms/<name>.json)."""
    raw = json.loads(Path(path).read_text())
    cell_kw = dict(raw.get("cell", {}))
    if "resistance_ohm" in cell_kw:
        r = float(cell_kw.pop("resistance_ohm"))
        cell_kw["resistance_curve"] = lambda soc, _r=r: _r
    geom_kw = dict(raw.get("geometry", {}))
    if "contact_angle_deg" in geom_kw:
        geom_kw["contact_angle"] = math.radians(float(geom_kw.pop("contact_angle_deg")))
    return AssemblySpec(
        cell=BatteryCellSpec(**cell_kw),
        geometry=FhpGeometry(**geom_kw),
        boundary=BoundarySpec(**raw.get("boundary", {})),
        n_cells=raw.get("n_cells"),
        initial_temperature=raw.get("initial_temperature", 293.15),
        fluid_accommodation=raw.get("fluid_accommodation", 1.0),
    )
