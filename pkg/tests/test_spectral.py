from __future__ import annotations

import csv
import io

import numpy as np
import pytest

from gpst.graph_core import CirculantSpec, build_circulant, build_walk_matrices, complete_graph
from gpst.spectral import (
    AmbiguousSpectrumError,
    Sign,
    circulant_eigenvalues,
    decompose,
    decompose_circulant,
    eigen_table_csv,
    eigenvalue_support,
    projector_sign_relation,
)

SPECS = [CirculantSpec.from_generators(n, g) for n, g in
         [(6, [1]), (7, [1]), (12, [1, 5]), (10, [1, 2]), (8, [1, 4]), (20, [3, 7]), (9, [1, 2, 4])]]


@pytest.mark.parametrize("spec", SPECS)
def test_circulant_eigenvalues_numeric(spec):
    P = build_walk_matrices(build_circulant(spec)).P
    got = sorted(v for _, _, v in circulant_eigenvalues(spec))
    assert np.allclose(got, sorted(np.linalg.eigvalsh(P)))
    for j, lam, val in circulant_eigenvalues(spec):
        ref = np.mean([np.cos(2 * np.pi * j * s / spec.n) for s in spec.s])
        assert val == pytest.approx(ref, abs=1e-12)
        assert abs(lam.to_complex().imag) < 1e-12


@pytest.mark.parametrize("spec", SPECS)
def test_circulant_projectors(spec):
    P = build_walk_matrices(build_circulant(spec)).P
    dec = decompose(P, spec)
    total = sum(c.projector for c in dec.classes)
    assert np.allclose(total, np.eye(spec.n))
    assert np.allclose(sum(c.value * c.projector for c in dec.classes), P)
    for a in dec.classes:
        assert np.allclose(a.projector @ a.projector, a.projector)
        assert a.multiplicity == len(a.indices)
    assert dec.values == sorted(dec.values, reverse=True)


@pytest.mark.parametrize("spec", SPECS)
def test_generic_matches_exact(spec):
    P = build_walk_matrices(build_circulant(spec)).P
    exact = decompose_circulant(spec)
    generic = decompose(P)
    assert len(exact) == len(generic)
    for a, b in zip(exact.classes, generic.classes):
        assert a.value == pytest.approx(b.value, abs=1e-9)
        assert np.allclose(a.projector, b.projector, atol=1e-9)


@pytest.mark.parametrize("spec", SPECS)
def test_sign_relation_matches_numeric(spec):
    dec = decompose_circulant(spec)
    n = spec.n
    for y in range(n):
        exact = projector_sign_relation(dec, 0, y)
        numeric = projector_sign_relation(decompose(dec.source), 0, y)
        assert exact == numeric


def test_sign_relation_values():
    dec = decompose_circulant(CirculantSpec.from_generators(6, [1]))
    assert projector_sign_relation(dec, 0, 3) == [Sign.PLUS, Sign.MINUS, Sign.PLUS, Sign.MINUS]
    with pytest.raises(ValueError):
        projector_sign_relation(dec, 0, 9)


def test_support():
    dec = decompose(build_walk_matrices(complete_graph(4)).P)
    e0 = np.eye(4)[0]
    assert len(eigenvalue_support(dec, e0)) == 2
    with pytest.raises(ValueError):
        eigenvalue_support(dec, np.ones(3))


def test_ambiguous_gap():
    P = np.diag([1.0, 1.0 - 5e-8, 0.0])
    with pytest.raises(AmbiguousSpectrumError):
        decompose(P)
    with pytest.raises(ValueError):
        decompose(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigen_table_csv():
    rows = list(csv.reader(io.StringIO(eigen_table_csv(CirculantSpec.from_generators(8, [1, 3])))))
    assert rows[0] == ["j", "lambda_float", "exact_tag_string", "class_id"]
    assert len(rows) == 9
    assert rows[5][1:] == ["-1", "-1", "2"]
