"""Spectral decomposition of the discriminant P.

Circulants take an exact route: the eigenvalue of ``u_j`` is
``(1/|S|) sum_{s in S} zeta_n^{js}``, built in Q(zeta_n), and indices are
grouped by exact equality. Any other graph goes through ``numpy.linalg.eigh``
with tolerance grouping plus a mandatory gap check.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomic import CycloElem
from .graph_core import CirculantSpec

GROUP_TOL = 1e-9
GAP_MIN = 1e-6
SUPPORT_TOL = 1e-9


class AmbiguousSpectrumError(ArithmeticError):
    pass


class Sign(enum.IntEnum):
    MIXED = 0
    PLUS = 1
    MINUS = -1


@dataclass(frozen=True)
class EigenClass:
    value: float
    projector: np.ndarray
    exact_tag: CycloElem | None = None  # the eigenvalue itself, exactly
    indices: frozenset[int] | None = None  # j with lambda_j equal to this value

    @property
    def multiplicity(self) -> int:
        return int(round(np.trace(self.projector).real))


@dataclass(frozen=True)
class SpectralDecomposition:
    classes: tuple[EigenClass, ...]
    source: np.ndarray
    circulant: CirculantSpec | None = None

    @property
    def values(self) -> list[float]:
        return [c.value for c in self.classes]

    def __len__(self) -> int:
        return len(self.classes)


def circulant_eigenvalues(spec: CirculantSpec) -> list[tuple[int, CycloElem, float]]:
    """``(j, lambda_j exactly, lambda_j as float)`` for j in [n]."""
    n, k = spec.n, spec.valency
    out = []
    for j in range(n):
        lam = CycloElem.sum_of_powers(n, [j * s for s in spec.s]).scale(Fraction(1, k))
        out.append((j, lam, float(lam)))
    return out


def _fourier(n: int, j: int) -> np.ndarray:
    return np.exp(2j * np.pi * j * np.arange(n) / n)


def decompose_circulant(spec: CirculantSpec, source: np.ndarray | None = None) -> SpectralDecomposition:
    n = spec.n
    groups: dict[CycloElem, list[int]] = {}
    for j, lam, _ in circulant_eigenvalues(spec):
        groups.setdefault(lam, []).append(j)
    classes = []
    for lam, idx in groups.items():
        E = np.zeros((n, n), dtype=complex)
        for j in idx:
            u = _fourier(n, j)
            E += np.outer(u, u.conj())
        E /= n
        if np.abs(E.imag).max() > 1e-12:  # pragma: no cover - index sets are closed under j -> -j
            raise ArithmeticError("circulant projector is not real")
        classes.append(EigenClass(float(lam), E.real.copy(), lam, frozenset(idx)))
    classes.sort(key=lambda c: -c.value)
    if source is None:
        source = sum(c.value * c.projector for c in classes)
    return SpectralDecomposition(tuple(classes), source, spec)


def decompose(P: np.ndarray, circulant: CirculantSpec | None = None,
              group_tol: float = GROUP_TOL) -> SpectralDecomposition:
    """Group the eigenvalues of the real symmetric ``P`` with their projectors.

    With ``circulant`` given, grouping is exact (see :func:`decompose_circulant`).
    """
    if circulant is not None:
        return decompose_circulant(circulant, P)
    if not np.allclose(P, P.T, atol=1e-12):
        raise ValueError("P must be symmetric")
    w, V = np.linalg.eigh(P)
    order = np.argsort(-w)
    w, V = w[order], V[:, order]
    clusters: list[list[int]] = [[0]]
    for i in range(1, len(w)):
        if w[clusters[-1][-1]] - w[i] <= group_tol:
            clusters[-1].append(i)
        else:
            clusters.append([i])
    for a, b in zip(clusters, clusters[1:]):
        gap = w[a[-1]] - w[b[0]]
        if gap < GAP_MIN:
            raise AmbiguousSpectrumError(f"eigenvalue gap {gap:.3g} is below {GAP_MIN}")
    classes = []
    for c in clusters:
        Vc = V[:, c]
        classes.append(EigenClass(float(np.mean(w[c])), Vc @ Vc.T))
    return SpectralDecomposition(tuple(classes), P)


def eigenvalue_support(dec: SpectralDecomposition, v: np.ndarray, tol: float = SUPPORT_TOL) -> list[EigenClass]:
    v = np.asarray(v)
    if v.shape != (dec.source.shape[0],):
        raise ValueError("vector dimension does not match the decomposition")
    return [c for c in dec.classes if np.linalg.norm(c.projector @ v) > tol]


def _unit(n: int, x: int) -> np.ndarray:
    e = np.zeros(n)
    e[x] = 1.0
    return e


def projector_sign_relation(dec: SpectralDecomposition, x: int, y: int,
                            tol: float = SUPPORT_TOL) -> list[Sign]:
    """Per class: PLUS if E e_x = E e_y, MINUS if E e_x = -E e_y, else MIXED."""
    n = dec.source.shape[0]
    if not (0 <= x < n and 0 <= y < n):
        raise ValueError("vertex out of range")
    if dec.circulant is not None:
        return [_circulant_sign(c.indices, n, y - x) for c in dec.classes]
    ex, ey = _unit(n, x), _unit(n, y)
    out = []
    for c in dec.classes:
        px, py = c.projector @ ex, c.projector @ ey
        if np.linalg.norm(px - py) <= tol:
            out.append(Sign.PLUS)
        elif np.linalg.norm(px + py) <= tol:
            out.append(Sign.MINUS)
        else:
            out.append(Sign.MIXED)
    return out


def _circulant_sign(indices: frozenset[int], n: int, shift: int) -> Sign:
    # E e_y = (1/n) sum_j zeta^{-j y} u_j and the u_j are independent, so the
    # relation holds iff zeta^{j (y-x)} takes one value in {+1, -1} over the class
    signs = set()
    for j in indices:
        r = (j * shift) % n
        if r == 0:
            signs.add(Sign.PLUS)
        elif 2 * r == n:
            signs.add(Sign.MINUS)
        else:
            return Sign.MIXED
    return signs.pop() if len(signs) == 1 else Sign.MIXED


def eigen_table_csv(spec: CirculantSpec) -> str:
    """CSV with columns ``j, lambda_float, exact_tag_string, class_id``."""
    dec = decompose_circulant(spec)
    class_of = {j: cid for cid, c in enumerate(dec.classes) for j in c.indices}
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "lambda_float", "exact_tag_string", "class_id"])
    for j, lam, val in circulant_eigenvalues(spec):
        w.writerow([j, f"{val:.17g}", str(lam), class_of[j]])
    return buf.getvalue()
