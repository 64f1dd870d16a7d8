"""Lumped thermal network under explicit-Euler time stepping.

Each node carries a heat-capacity product c*rho*V, a temperature, and an
optional source; neighbor resistances are shared symmetrically (one value
serves both directions).  A node update integrates
c_i rho_i V_i dT_i/dt = sum_nbr (T_nbr - T_i)/R_nbr + Q_i, all nodes
advanced simultaneously from the pre-step field.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from ..errors import StabilityViolation


@dataclass(frozen=True)
class ThermalNode:
    name: str
    heat_capacity: float        # c*rho*V, J/K
    temperature: float          # K
    source: float = 0.0         # W
    fixed: bool = False         # boundary node: temperature never changes

    def __post_init__(self):
        if self.heat_capacity <= 0 and not self.fixed:
            raise ValueError(f"node {self.name}: heat capacity must be positive")


@dataclass(frozen=True)
class ThermalNetwork:
    nodes: tuple[ThermalNode, ...]
    edges: dict[tuple[str, str], float] = field(default_factory=dict)

    def __post_init__(self):
        names = [n.name for n in self.nodes]
        if len(set(names)) != len(names):
            raise ValueError("node names must be unique")
        canonical = {}
        for (a, b), r in self.edges.items():
            if r <= 0:
                raise ValueError(f"resistance between {a} and {b} must be positive")
            if a not in names or b not in names or a == b:
                raise ValueError(f"edge ({a}, {b}) does not join two distinct nodes")
            key = (a, b) if a <= b else (b, a)
            if key in canonical and canonical[key] != r:
                raise ValueError(f"conflicting resistances for edge {key}")
            canonical[key] = r
        object.__setattr__(self, "edges", canonical)

    def node(self, name: str) -> ThermalNode:
        for n in self.nodes:
            if n.name == name:
                return n
        raise KeyError(name)

    def temperatures(self) -> dict[str, float]:
        return {n.name: n.temperature for n in self.nodes}

    def thermal_energy(self) -> float:
        """Sum of c*rho*V*T over non-fixed nodes (the conserved quantity of a
        closed, source-free network)."""
        return sum(n.heat_capacity * n.temperature for n in self.nodes if not n.fixed)


class CompiledNetwork:
    """Index arrays shared by single steps and long runs."""

    def __init__(self, net: ThermalNetwork):
        self.names = [n.name for n in net.nodes]
        index = {name: i for i, name in enumerate(self.names)}
        self.capacity = np.array([n.heat_capacity if not n.fixed else np.inf
                                  for n in net.nodes])
        self.source = np.array([n.source for n in net.nodes])
        self.free = np.array([not n.fixed for n in net.nodes])
        self.temps = np.array([n.temperature for n in net.nodes])
        self.ia = np.array([index[a] for a, _ in net.edges], dtype=int)
        self.ib = np.array([index[b] for _, b in net.edges], dtype=int)
        self.g = np.array(list(net.edges.values()))
        np.reciprocal(self.g, out=self.g)

    def stability_bound(self) -> float:
        """dt must stay below min_i c_i rho_i V_i / sum_nbr (1/R)."""
        gsum = np.zeros(len(self.names))
        np.add.at(gsum, self.ia, self.g)
        np.add.at(gsum, self.ib, self.g)
        with np.errstate(divide="ignore"):
            bounds = np.where(self.free & (gsum > 0), self.capacity / np.maximum(gsum, 1e-300), np.inf)
        return float(bounds.min())

    def advance(self, temps: np.ndarray, dt: float) -> np.ndarray:
        flux = self.g * (temps[self.ib] - temps[self.ia])
        net_heat = self.source.copy()
        np.add.at(net_heat, self.ia, flux)
        np.add.at(net_heat, self.ib, -flux)
        out = temps.copy()
        out[self.free] += dt * net_heat[self.free] / self.capacity[self.free]
        return out


def stability_bound(net: ThermalNetwork) -> float:
    return CompiledNetwork(net).stability_bound()


def step_network(net: ThermalNetwork, dt: float) -> ThermalNetwork:
    """One explicit-Euler step; returns the advanced network."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    compiled = CompiledNetwork(net)
    bound = compiled.stability_bound()
    if dt > bound:
        raise StabilityViolation(
            f"dt={dt} exceeds the explicit-Euler bound {bound:.6g}")
    temps = compiled.advance(compiled.temps, dt)
    nodes = tuple(
        n if n.fixed else replace(n, temperature=float(temps[i]))
        for i, n in enumerate(net.nodes)
    )
    return ThermalNetwork(nodes=nodes, edges=dict(net.edges))


def run_network(net: ThermalNetwork, dt: float, duration: float,
                sample_every: int = 1):
    """Integrate for duration seconds; returns (times, temps array, names).

    temps has one row per sample, one column per node, starting with the
    initial state.
    """
    if dt <= 0 or duration <= 0:
        raise ValueError("dt and duration must be positive")
    compiled = CompiledNetwork(net)
    bound = compiled.stability_bound()
    if dt > bound:
        raise StabilityViolation(
            f"dt={dt} exceeds the explicit-Euler bound {bound:.6g}")
    n_steps = int(round(duration / dt))
    temps = compiled.temps
    times = [0.0]
    history = [temps.copy()]
    for step in range(1, n_steps + 1):
        temps = compiled.advance(temps, dt)
        if step % sample_every == 0 or step == n_steps:
            times.append(step * dt)
            history.append(temps.copy())
    return np.array(times), np.vstack(history), list(compiled.names)
