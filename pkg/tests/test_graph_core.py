from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpst.graph_core import (
    CirculantSpec,
    Graph,
    GraphError,
    build_circulant,
    build_walk_matrices,
    complete_graph,
    cycle_graph,
    grover_entry,
    is_connected,
    random_irregular_graph,
    vertex_type_state,
)


def test_spec_closure_and_repr():
    spec = CirculantSpec.from_generators(12, [1, 5])
    assert spec.s == {1, 5, 7, 11}
    assert spec.valency == 4
    assert spec.generators == (1, 5)
    assert str(spec) == "X(Z_12, {+-1,+-5})"
    assert str(CirculantSpec.from_generators(6, [1, 3])) == "X(Z_6, {+-1,3})"
    assert CirculantSpec.from_json(spec.to_json()) == spec


@pytest.mark.parametrize("n,s", [(6, {0, 1, 5}), (6, {1}), (6, {7}), (1, set())])
def test_spec_rejects(n, s):
    with pytest.raises(GraphError):
        CirculantSpec(n, frozenset(s))


def test_connectivity():
    assert is_connected(CirculantSpec.from_generators(8, [1]))
    assert not is_connected(CirculantSpec.from_generators(8, [2]))
    assert not build_circulant(CirculantSpec.from_generators(8, [2])).is_connected()


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_isolated_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(GraphError):
        build_walk_matrices(g)
    with pytest.raises(GraphError):
        vertex_type_state(g, 2)
    with pytest.raises(GraphError):
        vertex_type_state(g, 5)


def _graphs():
    rng = np.random.default_rng(1)
    return [cycle_graph(5), complete_graph(4), build_circulant(CirculantSpec.from_generators(10, [1, 3])),
            Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)])] + [random_irregular_graph(rng) for _ in range(5)]


@pytest.mark.parametrize("g", _graphs())
def test_walk_matrix_identities(g):
    wm = build_walk_matrices(g)
    na = len(wm.arcs)
    assert len(wm.arcs) == 2 * len(g.edges)
    assert np.allclose(wm.d @ wm.d.T, np.eye(g.vertex_count))
    assert np.allclose(wm.R @ wm.R, np.eye(na))
    assert np.allclose(wm.U @ wm.U.T, np.eye(na))
    deg = np.array(g.degree, dtype=float)
    ref = wm.A_adj / np.sqrt(np.outer(deg, deg))
    assert np.allclose(wm.P, ref)
    for a in range(na):
        for b in range(na):
            assert wm.U[a, b] == pytest.approx(grover_entry(g, a, b), abs=1e-12)


def test_exact_P_regular():
    wm = build_walk_matrices(cycle_graph(6))
    assert wm.P_exact is not None
    assert np.allclose(wm.P_exact.astype(float), wm.P)
    assert build_walk_matrices(Graph.from_edges(3, [(0, 1), (1, 2)])).P_exact is None


def test_vertex_state():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    v = vertex_type_state(g, 0)
    assert np.linalg.norm(v) == pytest.approx(1.0)
    assert np.count_nonzero(v) == 3
    assert v.max() == pytest.approx(1 / math.sqrt(3))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_random_irregular(seed):
    g = random_irregular_graph(np.random.default_rng(seed))
    assert g.is_connected() and not g.is_regular()
    assert 4 <= g.vertex_count <= 10
