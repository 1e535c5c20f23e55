"""Graphs, symmetric arcs and the Grover-walk matrices d, R, U, A, P."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class CirculantSpec:
    """Connection data for X(Z_n, S). ``s`` holds canonical residues in [1, n-1]."""

    n: int
    s: frozenset[int]

    def __post_init__(self):
        if self.n < 2:
            raise GraphError(f"circulant needs n >= 2, got {self.n}")
        s = frozenset(self.s)
        object.__setattr__(self, "s", s)
        if any(not 0 <= v < self.n for v in s):
            raise GraphError(f"residues must lie in [0, {self.n - 1}]: {sorted(s)}")
        if 0 in s:
            raise GraphError("0 is not allowed in the connection set")
        if any((-v) % self.n not in s for v in s):
            raise GraphError(f"connection set {sorted(s)} is not closed under negation mod {self.n}")

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[int]) -> CirculantSpec:
        """Close ``gens`` under negation: ``from_generators(12, [1, 5])`` is {+-1, +-5}."""
        s = set()
        for g in gens:
            if g % n == 0:
                raise GraphError("0 is not allowed in the connection set")
            s.update((g % n, -g % n))
        return cls(n, frozenset(s))

    @property
    def valency(self) -> int:
        return len(self.s)

    @property
    def generators(self) -> tuple[int, ...]:
        """Representatives ``min(s, n - s)``, sorted."""
        return tuple(sorted({min(v, self.n - v) for v in self.s}))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "s": sorted(self.s)})

    @classmethod
    def from_json(cls, text: str) -> CirculantSpec:
        data = json.loads(text)
        return cls(int(data["n"]), frozenset(int(v) % int(data["n"]) for v in data["s"]))

    def __str__(self) -> str:
        gens = ",".join(f"+-{g}" if 2 * g != self.n else str(g) for g in self.generators)
        return f"X(Z_{self.n}, {{{gens}}})"


@dataclass(frozen=True)
class ArcSpace:
    arcs: tuple[tuple[int, int], ...]

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {a: i for i, a in enumerate(self.arcs)}

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        return tuple(self.index[(t, o)] for o, t in self.arcs)

    def origin(self, i: int) -> int:
        return self.arcs[i][0]

    def terminus(self, i: int) -> int:
        return self.arcs[i][1]

    def __len__(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            x, y = e
            if x == y:
                raise GraphError(f"loop at vertex {x}")
            if not (0 <= x < self.vertex_count and 0 <= y < self.vertex_count):
                raise GraphError(f"edge {e} has an endpoint outside [0, {self.vertex_count})")
            norm.add((min(x, y), max(x, y)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        edges = list(edges)
        if len({(min(e), max(e)) for e in edges}) != len(edges):
            raise GraphError("multi-edges are not allowed")
        return cls(vertex_count, frozenset(tuple(e) for e in edges))

    @cached_property
    def degree(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for x, y in self.edges:
            deg[x] += 1
            deg[y] += 1
        return tuple(deg)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for x, y in self.edges:
            nb[x].add(y)
            nb[y].add(x)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def arc_space(self) -> ArcSpace:
        arcs = sorted([(x, y) for x, y in self.edges] + [(y, x) for x, y in self.edges])
        return ArcSpace(tuple(arcs))

    def is_regular(self) -> bool:
        return len(set(self.degree)) == 1

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.vertex_count, self.vertex_count), dtype=np.int64)
        for x, y in self.edges:
            a[x, y] = a[y, x] = 1
        return a


def build_circulant(spec: CirculantSpec) -> Graph:
    n = spec.n
    edges = {(min(x, (x + s) % n), max(x, (x + s) % n)) for x in range(n) for s in spec.s}
    return Graph(n, frozenset(edges))


def is_connected(spec: CirculantSpec) -> bool:
    return math.gcd(spec.n, *spec.s) == 1


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((x, y) for x in range(n) for y in range(x + 1, n)))


def cycle_graph(n: int) -> Graph:
    return build_circulant(CirculantSpec.from_generators(n, [1]))


@dataclass(frozen=True)
class WalkMatrices:
    graph: Graph
    d: np.ndarray
    R: np.ndarray
    U: np.ndarray
    A_adj: np.ndarray
    P: np.ndarray
    # exact A/k for k-regular graphs, as an object array of Fractions
    P_exact: np.ndarray | None

    @property
    def arcs(self) -> ArcSpace:
        return self.graph.arc_space


def build_walk_matrices(g: Graph) -> WalkMatrices:
    deg = g.degree
    if min(deg) == 0:
        raise GraphError(f"vertex {deg.index(0)} is isolated; the boundary matrix is undefined")
    arcs = g.arc_space
    nv, na = g.vertex_count, len(arcs)
    d = np.zeros((nv, na))
    R = np.zeros((na, na))
    for i, (_, t) in enumerate(arcs.arcs):
        d[t, i] = 1.0 / math.sqrt(deg[t])
    for i, j in enumerate(arcs.inverse):
        R[i, j] = 1.0
    U = R @ (2.0 * d.T @ d - np.eye(na))
    A = g.adjacency()
    P = d @ R @ d.T
    P = (P + P.T) / 2
    P_exact = None
    if g.is_regular():
        k = deg[0]
        P_exact = np.array([[Fraction(int(v), k) for v in row] for row in A], dtype=object)
    return WalkMatrices(g, d, R, U, A, P, P_exact)


def grover_entry(g: Graph, a: int, b: int) -> float:
    """Closed form ``U[a, b] = 2/deg t(b) [o(a) = t(b)] - [a = b^-1]``."""
    arcs = g.arc_space
    val = 2.0 / g.degree[arcs.terminus(b)] if arcs.origin(a) == arcs.terminus(b) else 0.0
    return val - (1.0 if arcs.inverse[b] == a else 0.0)


def vertex_type_state(g: Graph, x: int) -> np.ndarray:
    """``d* e_x``: weight ``deg(x)^-1/2`` on each arc pointing into x."""
    if not 0 <= x < g.vertex_count:
        raise GraphError(f"vertex {x} out of range")
    if g.degree[x] == 0:
        raise GraphError(f"vertex {x} is isolated")
    arcs = g.arc_space
    v = np.zeros(len(arcs))
    w = 1.0 / math.sqrt(g.degree[x])
    for i, (_, t) in enumerate(arcs.arcs):
        if t == x:
            v[i] = w
    return v


def random_irregular_graph(rng: np.random.Generator, n_min: int = 4, n_max: int = 10,
                           p: float = 0.45) -> Graph:
    """Connected, non-regular G(n, p) sample; non-regular graphs are never circulant."""
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        upper = rng.random((n, n)) < p
        edges = frozenset((x, y) for x in range(n) for y in range(x + 1, n) if upper[x, y])
        g = Graph(n, edges)
        if min(g.degree) > 0 and g.is_connected() and not g.is_regular():
            return g
