"""Brute-force Grover-walk evolution and fidelity traces."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .graph_core import Graph, WalkMatrices, build_walk_matrices

PST_TOL = 1e-9
PHASE_TOL = 1e-8


def check_state(phi: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    phi = np.asarray(phi)
    if abs(np.linalg.norm(phi) - 1.0) > tol:
        raise ValueError(f"state norm {np.linalg.norm(phi):.12g} is not 1")
    return phi


def evolve(U: np.ndarray, phi: np.ndarray, tau: int) -> np.ndarray:
    """``U^tau phi`` by repeated matrix-vector products."""
    if tau < 0:
        raise ValueError("tau must be non-negative")
    if U.shape[1] != phi.shape[0]:
        raise ValueError("dimension mismatch")
    out = np.array(phi, dtype=complex if np.iscomplexobj(phi) else float)
    for _ in range(tau):
        out = U @ out
    return out


def transfer_check(state: np.ndarray, psi: np.ndarray, tol: float = PST_TOL,
                   phase_tol: float = PHASE_TOL) -> tuple[bool, complex]:
    """Decide ``state = gamma psi`` for a unimodular gamma; returns ``(hit, gamma)``."""
    gamma = complex(np.vdot(psi, state))
    hit = abs(gamma) >= 1.0 - tol and np.linalg.norm(state - gamma * psi) <= phase_tol
    return bool(hit), gamma


@dataclass
class FidelityTrace:
    times: list[int] = field(default_factory=list)
    fidelities: list[float] = field(default_factory=list)
    phases: dict[int, complex] = field(default_factory=dict)

    @property
    def hits(self) -> list[int]:
        return sorted(self.phases)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["tau", "fidelity", "phase_re", "phase_im"])
        for t, f in zip(self.times, self.fidelities):
            ph = self.phases.get(t)
            w.writerow([t, f"{f:.17g}",
                        "" if ph is None else f"{ph.real:.17g}",
                        "" if ph is None else f"{ph.imag:.17g}"])
        return buf.getvalue()


def fidelity_trace(U: np.ndarray, phi: np.ndarray, psi: np.ndarray, tau_max: int,
                   tol: float = PST_TOL, include_zero: bool = False) -> FidelityTrace:
    """Fidelities ``|<U^tau phi, psi>|`` for tau = 1..tau_max (0 too if asked)."""
    if tau_max < 1:
        raise ValueError("tau_max must be at least 1")
    trace = FidelityTrace()
    state = np.array(phi, dtype=float)
    for t in range(0 if include_zero else 1, tau_max + 1):
        if t > 0:
            state = U @ state
        hit, gamma = transfer_check(state, psi, tol)
        trace.times.append(t)
        trace.fidelities.append(abs(gamma))
        if hit:
            trace.phases[t] = gamma
    return trace


def chebyshev_identity_check(g: Graph | WalkMatrices, tau_max: int) -> float:
    """``max_{tau <= tau_max} max |d U^tau d* - T_tau(P)|``."""
    wm = g if isinstance(g, WalkMatrices) else build_walk_matrices(g)
    d, U, P = wm.d, wm.U, wm.P
    nv = P.shape[0]
    walk = d.T.copy()  # U^tau d*
    t_prev, t_cur = np.eye(nv), P.copy()
    worst = float(np.abs(d @ walk - t_prev).max())
    for tau in range(1, tau_max + 1):
        walk = U @ walk
        if tau > 1:
            t_prev, t_cur = t_cur, 2.0 * P @ t_cur - t_prev
        worst = max(worst, float(np.abs(d @ walk - t_cur).max()))
    return worst
