"""Chebyshev-polynomial characterization of perfect state transfer.

PST from ``d*e_x`` to ``d*e_y`` at time tau is decided three ways:

* (A) brute force: ``U^tau d*e_x = gamma d*e_y`` (see :mod:`gpst.walk_sim`);
* (B) ``T_tau(P) e_x = gamma e_y`` with gamma in {+1, -1};
* (C) per eigenvalue class: ``E e_x = +-E e_y``, and on the support of
  ``e_x`` the eigenvalue is ``cos(j pi / tau)`` with j even where the sign
  equals gamma and j odd where it is ``-gamma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

import numpy as np

from .cyclotomic import CycloElem, DegreeCapError, totient
from .cyclotomic.field import MAX_DEGREE
from .graph_core import CirculantSpec, Graph, WalkMatrices, build_walk_matrices, vertex_type_state
from .spectral import (
    SUPPORT_TOL,
    EigenClass,
    Sign,
    SpectralDecomposition,
    decompose,
    projector_sign_relation,
)
from .walk_sim import PST_TOL, transfer_check

B_TOL = 1e-8
COS_TOL = 1e-9
EXACT_TAU_MAX = 64


class InconsistencyError(RuntimeError):
    """Two routes that must agree (criterion vs. brute force) disagreed."""


# -- Chebyshev polynomials -----------------------------------------------------


def chebyshev_scalar(tau: int, lam):
    """``T_tau(lam)`` by the three-term recurrence (works for floats and Fractions)."""
    if tau < 0:
        raise ValueError("tau must be non-negative")
    prev, cur = 1 + 0 * lam, lam
    if tau == 0:
        return prev
    for _ in range(tau - 1):
        prev, cur = cur, 2 * lam * cur - prev
    return cur


def chebyshev_matrix(tau: int, P: np.ndarray) -> np.ndarray:
    """``T_tau(P)``; object arrays of Fractions give an exact result."""
    if tau < 0:
        raise ValueError("tau must be non-negative")
    n = P.shape[0]
    eye = np.eye(n, dtype=int).astype(P.dtype) if P.dtype == object else np.eye(n)
    prev, cur = eye, P.copy()
    if tau == 0:
        return prev
    for _ in range(tau - 1):
        prev, cur = cur, 2 * (P @ cur) - prev
    return cur


class ChebEval:
    """Cached ``T_tau(P) v`` for increasing tau."""

    def __init__(self, P: np.ndarray, v: np.ndarray):
        self.P = P
        self._vals = [np.asarray(v), P @ v]

    def __call__(self, tau: int) -> np.ndarray:
        while len(self._vals) <= tau:
            self._vals.append(2 * (self.P @ self._vals[-1]) - self._vals[-2])
        return self._vals[tau]


class ExactRegularChebyshev:
    """Integer shadow ``k^tau T_tau(A/k) e_x`` for a k-regular graph."""

    def __init__(self, A: np.ndarray, k: int, x: int):
        self.A = [[int(v) for v in row] for row in A]
        self.k = k
        n = len(self.A)
        e = [0] * n
        e[x] = 1
        self._vals = [e, [row[x] for row in self.A]]

    def __call__(self, tau: int) -> list[int]:
        k2 = self.k * self.k
        while len(self._vals) <= tau:
            w1, w0 = self._vals[-1], self._vals[-2]
            aw = [sum(a * w for a, w in zip(row, w1) if a) for row in self.A]
            self._vals.append([2 * u - k2 * v for u, v in zip(aw, w0)])
        return self._vals[tau]

    def gamma(self, tau: int, y: int) -> int | None:
        """gamma if ``T_tau(P) e_x = gamma e_y`` exactly, else None."""
        w = self(tau)
        scale = self.k**tau
        if any(v for i, v in enumerate(w) if i != y):
            return None
        if w[y] == scale:
            return 1
        if w[y] == -scale:
            return -1
        return None


# -- cos-angle recognition -----------------------------------------------------


@dataclass(frozen=True)
class CosAngleWitness:
    lam: float
    tau: int
    j: int | None
    exact: bool
    tag: CycloElem | None = None

    @property
    def parity(self) -> str | None:
        if self.j is None:
            return None
        return "even" if self.j % 2 == 0 else "odd"


def _candidates(lam: float, tau: int) -> list[int]:
    theta = math.acos(max(-1.0, min(1.0, lam)))
    j0 = round(tau * theta / math.pi)
    return [j for j in (j0, j0 - 1, j0 + 1) if 0 <= j <= tau]


@lru_cache(maxsize=200_000)
def _exact_cos_index(tag: CycloElem, tau: int, max_degree: int) -> int | None | str:
    L = math.lcm(tag.conductor, 2 * tau)
    if totient(L) > max_degree or totient(L) > MAX_DEGREE:
        return "cap"
    twice = tag.lift(L).scale(2)
    for j in _candidates(float(tag), tau):
        rhs = CycloElem.sum_of_powers(L, [j * (L // (2 * tau)), -j * (L // (2 * tau))])
        if rhs == twice:
            return j
    return None


def recognize_cos_angle(lam: float, tau: int, exact_tag: CycloElem | None = None,
                        max_degree: int = MAX_DEGREE, tol: float = COS_TOL) -> CosAngleWitness:
    """Find ``0 <= j <= tau`` with ``lam = cos(j pi / tau)``, or report ``j=None``.

    With ``exact_tag`` the test is ``2 lam = zeta_{2tau}^j + zeta_{2tau}^-j`` in
    a common cyclotomic field; beyond ``max_degree`` it falls back to floats.
    """
    if tau < 1:
        raise ValueError("tau must be positive")
    if abs(lam) > 1 + 1e-12:
        raise ValueError(f"|lambda| = {abs(lam)} exceeds 1")
    if exact_tag is not None:
        try:
            j = _exact_cos_index(exact_tag, tau, max_degree)
        except DegreeCapError:
            j = "cap"
        if j != "cap":
            return CosAngleWitness(lam, tau, j, True, exact_tag)
    for j in _candidates(lam, tau):
        if abs(math.cos(j * math.pi / tau) - lam) <= tol:
            return CosAngleWitness(lam, tau, j, False, exact_tag)
    return CosAngleWitness(lam, tau, None, False, exact_tag)


# -- criteria ------------------------------------------------------------------


def _unit(n: int, i: int) -> np.ndarray:
    e = np.zeros(n)
    e[i] = 1.0
    return e


def _snap_gamma(vec: np.ndarray, y: int, tol: float) -> int | None:
    val = float(vec[y])
    gamma = 1 if abs(val - 1.0) <= tol else -1 if abs(val + 1.0) <= tol else None
    if gamma is None:
        return None
    target = np.zeros_like(vec)
    target[y] = gamma
    return gamma if np.linalg.norm(vec - target) <= tol else None


def pst_criterion_B(g: Graph | WalkMatrices, x: int, y: int, tau: int,
                    tol: float = B_TOL) -> tuple[bool, int | None]:
    """Does ``T_tau(P) e_x = gamma e_y`` hold for some gamma in {+1, -1}?"""
    wm = g if isinstance(g, WalkMatrices) else build_walk_matrices(g)
    if x == y:
        raise ValueError("PST needs distinct vertices")
    n = wm.P.shape[0]
    vec = ChebEval(wm.P, _unit(n, x))(tau)
    gamma = _snap_gamma(vec, y, tol)
    if gamma == -1 and wm.graph.is_regular():
        raise InconsistencyError("criterion (B) produced gamma = -1 on a regular graph")
    return gamma is not None, gamma


@dataclass
class CriterionC:
    holds: bool
    gamma: int | None
    signs: list[Sign]
    support: list[int]
    witnesses: dict[int, CosAngleWitness]
    failure: str | None = None


def pst_criterion_C(dec: SpectralDecomposition, x: int, y: int, tau: int,
                    support_tol: float = SUPPORT_TOL) -> CriterionC:
    signs = projector_sign_relation(dec, x, y, support_tol)
    n = dec.source.shape[0]
    ex = _unit(n, x)
    support = [i for i, c in enumerate(dec.classes) if np.linalg.norm(c.projector @ ex) > support_tol]
    mixed = [i for i, s in enumerate(signs) if s == Sign.MIXED]
    if mixed:
        return CriterionC(False, None, signs, support, {}, f"(a): mixed sign on classes {mixed}")
    witnesses = {i: _witness(dec.classes[i], tau) for i in support}
    failures = []
    for gamma in (1, -1):
        bad = []
        for i in support:
            want = "even" if signs[i] == gamma else "odd"
            if witnesses[i].parity != want:
                bad.append(i)
        if not bad:
            return CriterionC(True, gamma, signs, support, witnesses)
        failures.append(f"gamma={gamma:+d}: parity fails on classes {bad}")
    return CriterionC(False, None, signs, support, witnesses, "(b)/(c): " + "; ".join(failures))


def _witness(cls: EigenClass, tau: int) -> CosAngleWitness:
    lam = max(-1.0, min(1.0, cls.value))
    return recognize_cos_angle(lam, tau, cls.exact_tag)


# -- search ----------------------------------------------------------------------


@dataclass
class PSTVerdict:
    occurs: bool
    source: int
    target: int | None = None
    tau_min: int | None = None
    gamma: int | None = None
    evidence: list[dict[str, Any]] = field(default_factory=list)
    all_targets: list[int] = field(default_factory=list)
    case: str | None = None

    def __post_init__(self):
        if self.occurs and (self.target is None or self.tau_min is None or self.gamma is None):
            raise ValueError("a positive verdict needs target, tau_min and gamma")

    def to_dict(self) -> dict[str, Any]:
        return {
            "occurs": self.occurs,
            "source": self.source,
            "target": self.target,
            "tau_min": self.tau_min,
            "gamma": self.gamma,
            "all_targets": list(self.all_targets),
            "case": self.case,
            "evidence": list(self.evidence),
        }


def search_min_pst(g: Graph | WalkMatrices, x: int, tau_max: int,
                   circulant: CirculantSpec | None = None, prune: bool = True,
                   pst_tol: float = PST_TOL, b_tol: float = B_TOL) -> PSTVerdict:
    """Smallest tau in 1..tau_max with PST out of ``d*e_x``, via (B) checked against (A).

    For circulants with ``prune`` only ``y = x + n/2`` is examined.
    """
    if tau_max < 1:
        raise ValueError("tau_max must be at least 1")
    wm = g if isinstance(g, WalkMatrices) else build_walk_matrices(g)
    graph = wm.graph
    n = graph.vertex_count
    if circulant is not None and prune:
        targets = [(x + n // 2) % n] if n % 2 == 0 else []
    else:
        targets = [y for y in range(n) if y != x]
    cheb = ChebEval(wm.P, _unit(n, x))
    exact = None
    if graph.is_regular():
        exact = ExactRegularChebyshev(wm.A_adj, graph.degree[0], x)
    psi = {y: vertex_type_state(graph, y) for y in targets}
    state = vertex_type_state(graph, x)
    evidence: list[dict[str, Any]] = [
        {"criterion": "candidates", "passed": True, "details": {"targets": targets}}
    ]
    for tau in range(1, tau_max + 1):
        state = wm.U @ state
        vec = cheb(tau)
        hits = []
        for y in targets:
            gamma_b = _snap_gamma(vec, y, b_tol)
            hit_a, gamma_a = transfer_check(state, psi[y], pst_tol)
            if (gamma_b is not None) != hit_a:
                raise InconsistencyError(
                    f"criterion (B) says {gamma_b is not None} but brute force says {hit_a} "
                    f"at tau={tau}, x={x}, y={y}"
                )
            if hit_a:
                if abs(gamma_a - gamma_b) > b_tol:
                    raise InconsistencyError(f"phase mismatch at tau={tau}: {gamma_a} vs {gamma_b}")
                hits.append((y, gamma_b, gamma_a))
        if not hits:
            continue
        y, gamma, gamma_a = hits[0]
        evidence.append({"criterion": "B", "passed": True,
                         "details": {"tau": tau, "target": y, "gamma": gamma}})
        evidence.append({"criterion": "A", "passed": True,
                         "details": {"tau": tau, "target": y,
                                     "phase_re": gamma_a.real, "phase_im": gamma_a.imag}})
        if exact is not None and tau <= EXACT_TAU_MAX:
            g_exact = exact.gamma(tau, y)
            if g_exact != gamma:
                raise InconsistencyError(f"exact shadow gives gamma={g_exact}, float gives {gamma}")
            evidence.append({"criterion": "B-exact", "passed": True,
                             "details": {"tau": tau, "target": y, "gamma": g_exact}})
        return PSTVerdict(True, x, y, tau, gamma, evidence, [h[0] for h in hits])
    evidence.append({"criterion": "B", "passed": False, "details": {"tau_max": tau_max}})
    evidence.append({"criterion": "A", "passed": False, "details": {"tau_max": tau_max}})
    return PSTVerdict(False, x, evidence=evidence)


def spectral_decomposition(wm: WalkMatrices, circulant: CirculantSpec | None = None) -> SpectralDecomposition:
    return decompose(wm.P, circulant)
