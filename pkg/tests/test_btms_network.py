import numpy as np
import pytest
from scipy.linalg import expm

from triz_engine.btms import (
    ThermalNetwork,
    ThermalNode,
    run_network,
    stability_bound,
    step_network,
)
from triz_engine.errors import StabilityViolation


def two_node_closed(t1=350.0, t2=290.0, c=100.0, r=2.0) -> ThermalNetwork:
    return ThermalNetwork(
        nodes=(ThermalNode("a", c, t1), ThermalNode("b", c, t2)),
        edges={("a", "b"): r})


class TestStep:
    def test_single_adiabatic_node_ramp(self):
        net = ThermalNetwork(nodes=(ThermalNode("n", 100.0, 300.0, source=1.0),),
                             edges={})
        for step in range(1, 11):
            net = step_network(net, 1.0)
            assert net.node("n").temperature == pytest.approx(300.0 + 0.01 * step,
                                                              abs=1e-12)

    def test_two_node_energy_conservation(self):
        net = two_node_closed()
        before = net.thermal_energy()
        net = step_network(net, 0.5)
        after = net.thermal_energy()
        assert after == pytest.approx(before, rel=1e-12)

    def test_closed_network_conservation_per_step(self):
        rng = np.random.default_rng(7)
        nodes = tuple(ThermalNode(f"n{i}", float(rng.uniform(50, 500)),
                                  float(rng.uniform(280, 360)))
                      for i in range(8))
        edges = {(f"n{i}", f"n{i+1}"): float(rng.uniform(0.5, 5.0))
                 for i in range(7)}
        edges[("n0", "n4")] = 3.0
        net = ThermalNetwork(nodes=nodes, edges=edges)
        dt = 0.5 * stability_bound(net)
        for _ in range(50):
            before = net.thermal_energy()
            net = step_network(net, dt)
            assert net.thermal_energy() == pytest.approx(before, rel=1e-12)

    def test_fixed_node_never_moves(self):
        net = ThermalNetwork(
            nodes=(ThermalNode("hot", 10.0, 350.0),
                   ThermalNode("amb", 1.0, 293.15, fixed=True)),
            edges={("hot", "amb"): 1.0})
        for _ in range(100):
            net = step_network(net, 0.5 * stability_bound(net))
        assert net.node("amb").temperature == 293.15
        assert net.node("hot").temperature == pytest.approx(293.15, abs=0.5)

    def test_stability_violation(self):
        net = two_node_closed()
        bound = stability_bound(net)
        with pytest.raises(StabilityViolation):
            step_network(net, bound * 1.01)

    def test_symmetric_edge_rejects_conflict(self):
        with pytest.raises(ValueError):
            ThermalNetwork(
                nodes=(ThermalNode("a", 1.0, 300.0), ThermalNode("b", 1.0, 300.0)),
                edges={("a", "b"): 1.0, ("b", "a"): 2.0})

    def test_symmetric_edge_same_value_ok(self):
        net = ThermalNetwork(
            nodes=(ThermalNode("a", 1.0, 300.0), ThermalNode("b", 1.0, 300.0)),
            edges={("a", "b"): 1.0, ("b", "a"): 1.0})
        assert net.edges == {("a", "b"): 1.0}


class TestChainOracle:
    def test_three_node_chain_vs_matrix_exponential(self):
        # dT/dt = M T  with M built from the same capacities/resistances;
        # exact solution via expm is the independent oracle
        capacities = np.array([120.0, 80.0, 150.0])
        r12, r23 = 4.0, 6.0
        t0 = np.array([350.0, 300.0, 280.0])

        m = np.zeros((3, 3))
        m[0, 0] = -1 / (r12 * capacities[0]); m[0, 1] = 1 / (r12 * capacities[0])
        m[1, 0] = 1 / (r12 * capacities[1])
        m[1, 1] = -(1 / r12 + 1 / r23) / capacities[1]
        m[1, 2] = 1 / (r23 * capacities[1])
        m[2, 1] = 1 / (r23 * capacities[2]); m[2, 2] = -1 / (r23 * capacities[2])

        net = ThermalNetwork(
            nodes=tuple(ThermalNode(f"n{i}", float(capacities[i]), float(t0[i]))
                        for i in range(3)),
            edges={("n0", "n1"): r12, ("n1", "n2"): r23})

        dt = 0.002
        times, temps, names = run_network(net, dt, 100.0, sample_every=500)
        for t, row in zip(times, temps):
            exact = expm(m * t) @ t0
            assert np.max(np.abs(row - exact)) < 1e-4

    def test_steady_state_matches_linear_solve(self):
        # constant sources + fixed boundary: the long-run field solves the
        # resistance network directly
        r = [1.5, 2.5, 1.0]
        q = [3.0, 0.0, 2.0]
        nodes = (
            ThermalNode("n0", 40.0, 300.0, source=q[0]),
            ThermalNode("n1", 60.0, 300.0, source=q[1]),
            ThermalNode("n2", 30.0, 300.0, source=q[2]),
            ThermalNode("amb", 1.0, 293.15, fixed=True),
        )
        edges = {("n0", "n1"): r[0], ("n1", "n2"): r[1], ("n2", "amb"): r[2]}
        net = ThermalNetwork(nodes=nodes, edges=edges)

        # direct linear solve: G T = -Q with boundary folded in
        g01, g12, g2a = 1 / r[0], 1 / r[1], 1 / r[2]
        lhs = np.array([
            [-g01, g01, 0.0],
            [g01, -(g01 + g12), g12],
            [0.0, g12, -(g12 + g2a)],
        ])
        rhs = np.array([-q[0], -q[1], -q[2] - g2a * 293.15])
        expected = np.linalg.solve(lhs, rhs)

        dt = 0.5 * stability_bound(net)
        _, temps, names = run_network(net, dt, 20000.0, sample_every=10**9)
        final = temps[-1][:3]
        assert np.max(np.abs(final - expected)) < 1e-6

    def test_run_rejects_unstable_dt(self):
        net = two_node_closed()
        with pytest.raises(StabilityViolation):
            run_network(net, stability_bound(net) * 2, 10.0)
