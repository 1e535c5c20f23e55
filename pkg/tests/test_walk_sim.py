from __future__ import annotations

import numpy as np
import pytest

from gpst.graph_core import CirculantSpec, build_circulant, build_walk_matrices, complete_graph, cycle_graph, random_irregular_graph, vertex_type_state
from gpst.pst_engine import chebyshev_matrix
from gpst.walk_sim import check_state, chebyshev_identity_check, evolve, fidelity_trace, transfer_check


def test_c6_trace():
    g = cycle_graph(6)
    wm = build_walk_matrices(g)
    trace = fidelity_trace(wm.U, vertex_type_state(g, 0), vertex_type_state(g, 3), 20)
    assert trace.hits == [3, 9, 15]
    assert all(abs(trace.phases[t] - 1) < 1e-9 for t in trace.hits)
    assert trace.to_csv().splitlines()[0] == "tau,fidelity,phase_re,phase_im"


def test_k4_never_hits():
    g = complete_graph(4)
    wm = build_walk_matrices(g)
    for y in (1, 2, 3):
        trace = fidelity_trace(wm.U, vertex_type_state(g, 0), vertex_type_state(g, y), 64)
        assert max(trace.fidelities) < 1 - 1e-6


def test_trace_validation():
    g = cycle_graph(4)
    wm = build_walk_matrices(g)
    with pytest.raises(ValueError):
        fidelity_trace(wm.U, vertex_type_state(g, 0), vertex_type_state(g, 2), 0)
    with pytest.raises(ValueError):
        evolve(wm.U, np.ones(3), 1)
    with pytest.raises(ValueError):
        evolve(wm.U, vertex_type_state(g, 0), -1)
    with pytest.raises(ValueError):
        check_state(np.ones(4))


def test_evolve_is_power():
    g = cycle_graph(5)
    wm = build_walk_matrices(g)
    phi = vertex_type_state(g, 0)
    assert np.allclose(evolve(wm.U, phi, 7), np.linalg.matrix_power(wm.U, 7) @ phi)
    assert np.linalg.norm(evolve(wm.U, phi, 13)) == pytest.approx(1.0)


def test_transfer_check_phase():
    psi = np.array([0.6, 0.8])
    hit, gamma = transfer_check(-psi, psi)
    assert hit and gamma == pytest.approx(-1)
    hit, _ = transfer_check(np.array([0.8, 0.6]), psi)
    assert not hit


def test_chebyshev_identity():
    rng = np.random.default_rng(5)
    graphs = [cycle_graph(7), build_circulant(CirculantSpec.from_generators(12, [1, 5]))]
    graphs += [random_irregular_graph(rng) for _ in range(5)]
    for g in graphs:
        assert chebyshev_identity_check(g, 20) <= 1e-9


def test_chebyshev_identity_direct():
    g = build_circulant(CirculantSpec.from_generators(9, [1, 3]))
    wm = build_walk_matrices(g)
    for tau in range(8):
        lhs = wm.d @ np.linalg.matrix_power(wm.U, tau) @ wm.d.T
        assert np.allclose(lhs, chebyshev_matrix(tau, wm.P), atol=1e-10)
