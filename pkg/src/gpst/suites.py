"""Verification sweeps behind ``gpst verify``.

Each suite returns a list of plain-dict records with a boolean ``pass`` field.
Records are produced in a fixed order so identical arguments give identical
reports.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Any

import numpy as np

from .classifier import enumerate_circulants, nonintegrality_witness, normalize_pair, verify_classification
from .cyclotomic import (
    CycloElem,
    bosma_basis,
    crt_compose,
    crt_decompose,
    delta_integrality,
    is_algebraic_integer,
    totient,
)
from .cyclotomic.oracle import is_algebraic_integer_charpoly
from .graph_core import build_circulant, build_walk_matrices, random_irregular_graph
from .pst_engine import search_min_pst
from .symmetry import circulant_inversion, circulant_rotation, dihedral_automorphisms, pst_transport_check, verify_intertwining
from .walk_sim import chebyshev_identity_check

SUITES = ("theorems", "lemmas", "cyclotomic", "all")
CHEB_TOL = 1e-9
INTERTWINE_TOL = 1e-12


def theorems_suite(n_max: int, jobs: int = 1, tau_max_factor: int = 4) -> list[dict[str, Any]]:
    report = verify_classification(n_max, tau_max_factor, jobs)
    return [{"suite": "theorems", "kind": "classification", "pass": r["agree"], **r} for r in report.records]


def lemmas_suite(n_max: int, seed: int, n_random: int = 10, tau_cheb: int = 20) -> list[dict[str, Any]]:
    out = []
    for spec in enumerate_circulants(n_max):
        g = build_circulant(spec)
        wm = build_walk_matrices(g)
        cheb = chebyshev_identity_check(wm, tau_cheb)
        inter = max(verify_intertwining(wm, circulant_rotation(spec, 1, g)),
                    verify_intertwining(wm, circulant_inversion(spec, g)))
        verdict = search_min_pst(wm, 0, 4 * spec.n, spec, prune=False)
        transport = None
        if verdict.occurs:
            transport = all(
                pst_transport_check(wm, aut, 0, verdict.target, verdict.tau_min, verdict.gamma)
                for aut in dihedral_automorphisms(spec, g)
            )
        out.append({
            "suite": "lemmas", "kind": "circulant", "n": spec.n, "s": sorted(spec.s),
            "chebyshev_dev": cheb, "intertwining_dev": inter, "transport": transport,
            "pass": cheb <= CHEB_TOL and inter <= INTERTWINE_TOL and transport is not False,
        })
    rng = np.random.default_rng(seed)
    for i in range(n_random):
        g = random_irregular_graph(rng)
        cheb = chebyshev_identity_check(g, tau_cheb)
        out.append({
            "suite": "lemmas", "kind": "random-graph", "index": i, "vertices": g.vertex_count,
            "edges": sorted(g.edges), "chebyshev_dev": cheb, "pass": cheb <= CHEB_TOL,
        })
    return out


def random_cyclo(rnd: random.Random, n: int) -> CycloElem:
    den = rnd.choice([1, 1, 2, 3, 4])
    return CycloElem(n, tuple(Fraction(rnd.randint(-3, 3), den) for _ in range(totient(n))))


def basis_membership_ok(basis) -> bool:
    """Each basis exponent has pi in A_p and theta in B_p for every prime p."""
    choices = dict(basis.choices)
    for e in basis.exponents:
        dec = crt_decompose(basis.n, e) if basis.n > 1 else None
        if dec is None:
            continue
        for p, (pi, _) in dec.pi_theta().items():
            if pi not in choices[p]:
                return False
    return True


def cyclotomic_suite(n_max: int, seed: int, samples: int = 10) -> list[dict[str, Any]]:
    out = []
    basis = bosma_basis(36, {2: (0, 1), 3: (0, 2)})
    out.append({
        "suite": "cyclotomic", "kind": "bosma-36", "exponents": sorted(basis.exponents),
        "pass": len(basis.exponents) == 12 and basis_membership_ok(basis),
    })
    dec = crt_decompose(36, 5)
    pt = dec.pi_theta()
    out.append({
        "suite": "cyclotomic", "kind": "crt-36-5", "parts": list(dec.parts),
        "pi_theta": [pt[2][0], pt[2][1], pt[3][0], pt[3][1]],
        "pass": dec.parts == (1, 8) and (pt[2], pt[3]) == ((1, 0), (2, 2)),
    })
    for n in (12, 36, 45, 60):
        ok = all(crt_compose(n, crt_decompose(n, x).parts) == x for x in range(n))
        out.append({"suite": "cyclotomic", "kind": "crt-roundtrip", "n": n, "pass": ok})
    rnd = random.Random(seed)
    for n in (5, 7, 8, 9, 12):
        disagree = 0
        integral = 0
        for _ in range(samples):
            e = random_cyclo(rnd, n)
            a = is_algebraic_integer(e)
            integral += a
            disagree += a != is_algebraic_integer_charpoly(e)
        out.append({"suite": "cyclotomic", "kind": "integrality-oracle", "n": n, "samples": samples,
                    "integral": integral, "disagreements": disagree, "pass": disagree == 0})
    for l in range(2, n_max // 2 + 1):
        seen = set()
        for a in range(1, l):
            for b in range(a + 1, l):
                if a + b == l or (a, b) in seen:
                    continue
                seen.add(normalize_pair(l, a, b))
                integral = delta_integrality(l, a, b)
                spec_graph = build_circulant_pair(l, a, b)
                brute = search_min_pst(spec_graph, 0, 8 * l)
                witness = nonintegrality_witness(l, a, b)
                out.append({
                    "suite": "cyclotomic", "kind": "delta", "l": l, "a": a, "b": b,
                    "integral": integral, "brute_force_pst": brute.occurs,
                    "non_integer": witness["non_integer"],
                    "pass": not integral and not brute.occurs,
                })
    return out


def build_circulant_pair(l: int, a: int, b: int):
    from .graph_core import CirculantSpec

    return build_circulant(CirculantSpec.from_generators(2 * l, [a, b]))


def run_suite(name: str, n_max: int, seed: int, jobs: int = 1) -> list[dict[str, Any]]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    records: list[dict[str, Any]] = []
    if name in ("theorems", "all"):
        records += theorems_suite(n_max, jobs)
    if name in ("lemmas", "all"):
        records += lemmas_suite(n_max, seed)
    if name in ("cyclotomic", "all"):
        records += cyclotomic_suite(n_max, seed)
    failed = sum(not r["pass"] for r in records)
    records.append({"suite": "summary", "requested": name, "n_max": n_max, "seed": seed,
                    "records": len(records), "failed": failed, "pass": failed == 0})
    return records
