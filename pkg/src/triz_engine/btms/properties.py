"""Working-fluid properties for the flat heat pipe.

Acetone saturation states pinned on a 5 K grid; the simulation looks a
state up by rounding the vapor temperature to the nearest bin, so fluid
resistances change only when the vapor crosses a bin boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

ACETONE_R_GAS = 143.16  # J/(kg K), universal gas constant over molar mass

# (T K, saturation pressure Pa, latent heat J/kg, vapor viscosity Pa s,
#  vapor density kg/m^3)
_ACETONE_TABLE = (
    (270, 7952.13, 558489.0, 6.75e-06, 0.20574),
    (275, 10336.0, 554003.0, 6.88e-06, 0.26255),
    (280, 13293.1, 549457.0, 7.00e-06, 0.33163),
    (285, 16926.6, 544848.0, 7.12e-06, 0.41488),
    (290, 21352.1, 540176.0, 7.25e-06, 0.51432),
    (295, 26697.3, 535436.0, 7.37e-06, 0.63218),
    (300, 33103.2, 530627.0, 7.50e-06, 0.77080),
    (305, 40723.4, 525746.0, 7.62e-06, 0.93269),
    (310, 49725.3, 520789.0, 7.75e-06, 1.12050),
    (315, 60289.4, 515755.0, 7.87e-06, 1.33700),
    (320, 72609.7, 510638.0, 8.00e-06, 1.58500),
    (325, 86893.7, 505437.0, 8.12e-06, 1.86770),
    (330, 103362.0, 500147.0, 8.25e-06, 2.18800),
    (335, 122248.0, 494765.0, 8.38e-06, 2.54910),
    (340, 143798.0, 489285.0, 8.50e-06, 2.95440),
    (345, 168271.0, 483702.0, 8.62e-06, 3.40710),
    (350, 195937.0, 478013.0, 8.75e-06, 3.91060),
    (355, 227077.0, 472211.0, 8.87e-06, 4.46820),
    (360, 261983.0, 466291.0, 9.00e-06, 5.08350),
    (365, 300959.0, 460245.0, 9.12e-06, 5.75980),
    (370, 344315.0, 454066.0, 9.25e-06, 6.50050),
)

TABLE_STEP = 5.0
TABLE_MIN = _ACETONE_TABLE[0][0]
TABLE_MAX = _ACETONE_TABLE[-1][0]


@dataclass(frozen=True)
class WorkingFluidState:
    """Saturation state of the working fluid at one vapor temperature."""

    vapor_temperature: float   # K
    vapor_pressure: float      # Pa
    latent_heat: float         # J/kg
    vapor_viscosity: float     # Pa s
    vapor_density: float       # kg/m^3
    gas_constant: float = ACETONE_R_GAS   # J/(kg K)
    accommodation: float = 1.0            # sigma, (0, 1]

    def __post_init__(self):
        for name in ("vapor_temperature", "vapor_pressure", "latent_heat",
                     "vapor_viscosity", "vapor_density", "gas_constant"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if not 0 < self.accommodation <= 1:
            raise ValueError("accommodation coefficient must be in (0, 1]")


def temperature_bin(temperature: float) -> float:
    """Nearest 5 K grid point, clamped to the table range."""
    snapped = round(temperature / TABLE_STEP) * TABLE_STEP
    return min(max(snapped, TABLE_MIN), TABLE_MAX)


def acetone_state(temperature: float, accommodation: float = 1.0) -> WorkingFluidState:
    """Saturation state at the binned temperature."""
    t = temperature_bin(temperature)
    for row in _ACETONE_TABLE:
        if row[0] == t:
            return WorkingFluidState(
                vapor_temperature=float(row[0]), vapor_pressure=row[1],
                latent_heat=row[2], vapor_viscosity=row[3], vapor_density=row[4],
                accommodation=accommodation)
    raise ValueError(f"no table row for {t} K")  # unreachable after clamping
