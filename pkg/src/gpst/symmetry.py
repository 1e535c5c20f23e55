"""Graph automorphisms as permutation matrices on vertices and arcs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .graph_core import CirculantSpec, Graph, WalkMatrices, build_circulant, build_walk_matrices, vertex_type_state
from .walk_sim import PHASE_TOL, evolve


class NotAnAutomorphismError(ValueError):
    pass


@dataclass(frozen=True)
class VertexAutomorphism:
    graph: Graph
    mapping: tuple[int, ...]

    def __post_init__(self):
        n = self.graph.vertex_count
        mapping = tuple(int(v) for v in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if sorted(mapping) != list(range(n)):
            raise NotAnAutomorphismError(f"{mapping} is not a permutation of [{n}]")
        for x, y in self.graph.edges:
            gx, gy = mapping[x], mapping[y]
            if (min(gx, gy), max(gx, gy)) not in self.graph.edges:
                raise NotAnAutomorphismError(f"edge {{{x},{y}}} is sent to a non-edge")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @cached_property
    def M(self) -> np.ndarray:
        """``M[x, y] = 1`` iff ``x = g(y)``."""
        n = len(self.mapping)
        m = np.zeros((n, n))
        m[list(self.mapping), list(range(n))] = 1.0
        return m

    @cached_property
    def arc_map(self) -> ArcAutomorphism:
        return ArcAutomorphism(self)

    def fixes(self, x: int) -> bool:
        return self.mapping[x] == x


@dataclass(frozen=True)
class ArcAutomorphism:
    """The arc permutation ``(x, y) -> (g(x), g(y))`` induced by a vertex automorphism."""

    vertex: VertexAutomorphism

    @cached_property
    def mapping(self) -> tuple[int, ...]:
        arcs = self.vertex.graph.arc_space
        g = self.vertex.mapping
        return tuple(arcs.index[(g[o], g[t])] for o, t in arcs.arcs)

    @cached_property
    def N(self) -> np.ndarray:
        na = len(self.mapping)
        m = np.zeros((na, na))
        m[list(self.mapping), list(range(na))] = 1.0
        return m


def automorphism(g: Graph, mapping: Sequence[int]) -> VertexAutomorphism:
    return VertexAutomorphism(g, tuple(mapping))


def parse_permutation(text: str) -> tuple[int, ...]:
    """One-line notation ``"1,2,0"`` -> ``(1, 2, 0)``."""
    return tuple(int(v) for v in text.split(",") if v.strip())


def circulant_rotation(spec: CirculantSpec, z: int, graph: Graph | None = None) -> VertexAutomorphism:
    g = graph or build_circulant(spec)
    return VertexAutomorphism(g, tuple((x + z) % spec.n for x in range(spec.n)))


def circulant_inversion(spec: CirculantSpec, graph: Graph | None = None) -> VertexAutomorphism:
    g = graph or build_circulant(spec)
    return VertexAutomorphism(g, tuple((-x) % spec.n for x in range(spec.n)))


def dihedral_automorphisms(spec: CirculantSpec, graph: Graph | None = None) -> list[VertexAutomorphism]:
    """All rotations ``x -> x + z`` and reflections ``x -> z - x`` (2n maps)."""
    g = graph or build_circulant(spec)
    n = spec.n
    rots = [VertexAutomorphism(g, tuple((x + z) % n for x in range(n))) for z in range(n)]
    refl = [VertexAutomorphism(g, tuple((z - x) % n for x in range(n))) for z in range(n)]
    return rots + refl


def verify_intertwining(g: Graph | WalkMatrices, aut: VertexAutomorphism) -> float:
    """``max(|d* M - N d*|, |U N - N U|)`` entrywise."""
    wm = g if isinstance(g, WalkMatrices) else build_walk_matrices(g)
    M, N = aut.M, aut.arc_map.N
    ds = wm.d.T
    return float(max(np.abs(ds @ M - N @ ds).max(), np.abs(wm.U @ N - N @ wm.U).max()))


def pst_transport_check(g: Graph | WalkMatrices, aut: VertexAutomorphism, x: int, y: int,
                        tau: int, gamma: complex, tol: float = PHASE_TOL) -> bool:
    """Does ``U^tau d*e_{g(x)} = gamma d*e_{g(y)}`` hold?"""
    wm = g if isinstance(g, WalkMatrices) else build_walk_matrices(g)
    graph = wm.graph
    out = evolve(wm.U, vertex_type_state(graph, aut(x)), tau)
    return bool(np.linalg.norm(out - gamma * vertex_type_state(graph, aut(y))) <= tol)


def fixing_group_obstruction(g: Graph, x: int, y: int, auts: Iterable[VertexAutomorphism]) -> bool:
    """True when some automorphism fixes exactly one of x, y (PST x -> y is then impossible)."""
    if x == y:
        return False
    return any(a.fixes(x) != a.fixes(y) for a in auts)
