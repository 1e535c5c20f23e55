from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gpst.cyclotomic import CycloElem
from gpst.graph_core import CirculantSpec, Graph, build_circulant, build_walk_matrices, complete_graph, cycle_graph
from gpst.pst_engine import (
    ExactRegularChebyshev,
    chebyshev_matrix,
    chebyshev_scalar,
    pst_criterion_B,
    pst_criterion_C,
    recognize_cos_angle,
    search_min_pst,
    spectral_decomposition,
)
from gpst.spectral import decompose_circulant


@given(st.integers(0, 30), st.floats(-1, 1))
def test_chebyshev_scalar_cos(tau, lam):
    assert chebyshev_scalar(tau, lam) == pytest.approx(math.cos(tau * math.acos(lam)), abs=1e-9)


def test_chebyshev_exact():
    assert chebyshev_scalar(3, Fraction(1, 2)) == -1
    P = build_walk_matrices(cycle_graph(6)).P_exact
    T = chebyshev_matrix(3, P)
    assert T[0, 3] == 1 and sum(abs(v) for v in T[0]) == 1
    with pytest.raises(ValueError):
        chebyshev_scalar(-1, 0.5)


def test_exact_regular_shadow():
    wm = build_walk_matrices(build_circulant(CirculantSpec.from_generators(12, [1, 5])))
    ex = ExactRegularChebyshev(wm.A_adj, 4, 0)
    for tau in range(10):
        ref = chebyshev_matrix(tau, wm.P)[:, 0] * 4**tau
        assert np.allclose(ex(tau), ref)
    assert ex.gamma(6, 6) == 1
    assert ex.gamma(5, 6) is None


@pytest.mark.parametrize("tau,j", [(3, 1), (6, 4), (10, 7), (7, 0), (7, 7)])
def test_recognize_cos(tau, j):
    lam = math.cos(j * math.pi / tau)
    w = recognize_cos_angle(lam, tau)
    assert w.j == j and not w.exact
    tag = CycloElem.sum_of_powers(2 * tau, [j, -j]).scale(Fraction(1, 2))
    w = recognize_cos_angle(lam, tau, tag)
    assert w.j == j and w.exact and w.parity == ("even" if j % 2 == 0 else "odd")


def test_recognize_negative():
    tag = CycloElem.sum_of_powers(5, [1, 4]).scale(Fraction(1, 2))
    assert recognize_cos_angle(float(tag), 7, tag).j is None
    assert recognize_cos_angle(0.3, 5).j is None
    with pytest.raises(ValueError):
        recognize_cos_angle(1.5, 5)
    with pytest.raises(ValueError):
        recognize_cos_angle(0.5, 0)


@pytest.mark.parametrize("n,gens,target,tau", [
    (6, [1], 3, 3), (6, [1, 2], 3, 6), (12, [1, 5], 6, 6), (14, [2, 5], 7, 14), (20, [3, 7], 10, 10),
])
def test_search_positive(n, gens, target, tau):
    spec = CirculantSpec.from_generators(n, gens)
    v = search_min_pst(build_circulant(spec), 0, 4 * n, spec)
    assert (v.occurs, v.target, v.tau_min, v.gamma) == (True, target, tau, 1)
    assert any(e["criterion"] == "B-exact" for e in v.evidence)
    unpruned = search_min_pst(build_circulant(spec), 0, 4 * n, spec, prune=False)
    assert (unpruned.target, unpruned.tau_min) == (target, tau)


@pytest.mark.parametrize("n,gens", [(10, [1, 2]), (8, [1, 3]), (6, [1, 3]), (4, [1, 2]), (7, [1])])
def test_search_negative(n, gens):
    spec = CirculantSpec.from_generators(n, gens)
    assert not search_min_pst(build_circulant(spec), 0, 8 * n, spec, prune=False).occurs


def test_search_generic_graph():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    v = search_min_pst(path, 0, 20)
    assert v.occurs and v.target == 2
    assert not search_min_pst(complete_graph(4), 0, 40).occurs
    with pytest.raises(ValueError):
        search_min_pst(path, 0, 0)


def test_criterion_B():
    g = cycle_graph(6)
    assert pst_criterion_B(g, 0, 3, 3) == (True, 1)
    assert pst_criterion_B(g, 0, 3, 2) == (False, None)
    with pytest.raises(ValueError):
        pst_criterion_B(g, 0, 0, 3)


@pytest.mark.parametrize("n,gens", [(6, [1]), (12, [1, 5]), (10, [1, 2]), (8, [1, 4]), (9, [1, 2])])
def test_criterion_C_matches_B(n, gens):
    spec = CirculantSpec.from_generators(n, gens)
    wm = build_walk_matrices(build_circulant(spec))
    dec = spectral_decomposition(wm, spec)
    generic = spectral_decomposition(wm)
    for tau in range(1, 2 * n + 1):
        for y in range(1, n):
            b, gb = pst_criterion_B(wm, 0, y, tau)
            c = pst_criterion_C(dec, 0, y, tau)
            assert (c.holds, c.gamma) == (b, gb)
            assert pst_criterion_C(generic, 0, y, tau).holds == b


def test_criterion_C_failure_reasons():
    spec = CirculantSpec.from_generators(10, [1, 2])
    dec = decompose_circulant(spec)
    assert "mixed" in pst_criterion_C(dec, 0, 3, 5).failure
    assert "parity" in pst_criterion_C(dec, 0, 5, 5).failure


def test_verdict_serializes():
    v = search_min_pst(cycle_graph(6), 0, 10)
    d = v.to_dict()
    assert d["occurs"] and d["tau_min"] == 3 and d["evidence"]
