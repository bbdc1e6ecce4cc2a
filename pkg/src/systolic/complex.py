"""Finite abstract simplicial complexes and the basic operators on them.

A simplex is a strictly increasing tuple of non-negative integer vertex ids.
Complexes store every face explicitly, so membership tests are set lookups.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import networkx as nx
import numpy as np

from .errors import DomainError, InputError

Simplex = tuple[int, ...]

__all__ = [
    "Complex",
    "FiniteMetric",
    "Graph",
    "Simplex",
    "as_simplex",
    "complement",
    "connected_components",
    "flag_complex",
    "full_subcomplex",
    "is_flag",
    "link",
    "make_complex",
    "one_ball",
    "rips_complex",
]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Sort ``vertices`` into a simplex, rejecting duplicates and bad ids."""
    s = tuple(sorted(vertices))
    if not s:
        raise InputError("empty simplex")
    for a, b in zip(s, s[1:]):
        if a == b:
            raise InputError(f"duplicate vertex {a} in simplex")
    for v in s:
        if not isinstance(v, (int, np.integer)) or v < 0:
            raise InputError(f"vertex ids must be non-negative integers, got {v!r}")
    return tuple(int(v) for v in s)


def _faces(s: Simplex) -> Iterator[Simplex]:
    for k in range(1, len(s) + 1):
        yield from combinations(s, k)


class Complex:
    """An immutable, face-closed set of simplices.

    Build with :func:`make_complex` unless the simplex set is already known to be
    closed; the constructor trusts its input when ``closed=True``.
    """

    def __init__(self, simplices: Iterable[Simplex] = (), *, closed: bool = False,
                 clique_cutoff: int | None = None):
        if closed:
            self._simplices = frozenset(simplices)
        else:
            acc: set[Simplex] = set()
            for s in simplices:
                if s in acc:
                    continue
                acc.update(_faces(s))
            self._simplices = frozenset(acc)
        # Set by flag_complex when cliques above this dimension were dropped.
        self.clique_cutoff = clique_cutoff

    @property
    def simplices(self) -> frozenset[Simplex]:
        return self._simplices

    def __contains__(self, s) -> bool:
        return s in self._simplices

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self._simplices)

    def __len__(self) -> int:
        return len(self._simplices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return (f"Complex(vertices={len(self.vertices)}, simplices={len(self)}, "
                f"dim={self.dimension})")

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(s[0] for s in self._simplices if len(s) == 1)

    @cached_property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self._simplices), default=-1)

    def spans(self, vertices: Iterable[int]) -> bool:
        """True if the vertex set (duplicates allowed) is a simplex of the complex."""
        return tuple(sorted(set(vertices))) in self._simplices

    def simplices_of_dim(self, k: int) -> list[Simplex]:
        return sorted(s for s in self._simplices if len(s) == k + 1)

    @cached_property
    def edges(self) -> list[Simplex]:
        return self.simplices_of_dim(1)

    @cached_property
    def triangles(self) -> list[Simplex]:
        return self.simplices_of_dim(2)

    @cached_property
    def maximal_simplices(self) -> list[Simplex]:
        cofaces: set[Simplex] = set()
        for s in self._simplices:
            if len(s) > 1:
                cofaces.update(combinations(s, len(s) - 1))
        return sorted(s for s in self._simplices if s not in cofaces)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(n) for v, n in adj.items()}

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def graph(self) -> Graph:
        return Graph(self.vertices, frozenset(self.edges))

    def nx_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def is_subcomplex_of(self, other: Complex) -> bool:
        return self._simplices <= other._simplices

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self._simplices)

    def intersection(self, other: Complex) -> Complex:
        return Complex(self._simplices & other._simplices, closed=True)

    def union(self, other: Complex) -> Complex:
        return Complex(self._simplices | other._simplices, closed=True)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph; edges are sorted vertex pairs."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            a, b = e
            if a == b:
                raise InputError(f"loop at vertex {a}")
            if a not in self.vertices or b not in self.vertices:
                raise InputError(f"edge {e} leaves the vertex set")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Graph:
        edges = list(edges)
        vs = set(vertices)
        for a, b in edges:
            vs.update((a, b))
        return cls(frozenset(vs), frozenset(edges))


@dataclass(frozen=True)
class FiniteMetric:
    """Points with a symmetric, non-negative distance matrix (zero diagonal).

    The triangle inequality is not required.
    """

    points: tuple[int, ...]
    dist: np.ndarray = field(repr=False)

    def __post_init__(self):
        d = np.asarray(self.dist, dtype=float)
        n = len(self.points)
        if d.shape != (n, n):
            raise InputError(f"distance matrix must be {n}x{n}, got {d.shape}")
        if len(set(self.points)) != n:
            raise InputError("duplicate points")
        if not np.allclose(d, d.T) or (d < 0).any() or (np.diag(d) != 0).any():
            raise InputError("distance matrix must be symmetric, non-negative, zero on the diagonal")
        object.__setattr__(self, "points", tuple(int(p) for p in self.points))
        object.__setattr__(self, "dist", d)


def make_complex(maximal: Iterable[Iterable[int]]) -> Complex:
    """Face closure of the listed simplices."""
    return Complex(as_simplex(s) for s in maximal)


def flag_complex(g: Graph, max_dim: int | None = None) -> Complex:
    """Clique complex of ``g``, optionally truncated at dimension ``max_dim``."""
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges)
    limit = None if max_dim is None else max_dim + 1
    simplices = []
    truncated = False
    # enumerate_all_cliques yields cliques by non-decreasing size
    for clique in nx.enumerate_all_cliques(nxg):
        if limit is not None and len(clique) > limit:
            truncated = True
            break
        simplices.append(tuple(sorted(clique)))
    return Complex(simplices, closed=True, clique_cutoff=max_dim if truncated else None)


def is_flag(x: Complex) -> bool:
    """Every set of pairwise adjacent vertices spans a simplex."""
    return flag_complex(x.graph()) == x


def _require(x: Complex, s: Simplex) -> Simplex:
    s = tuple(sorted(s))
    if s not in x:
        raise DomainError(f"{s} is not a simplex of the complex")
    return s


def link(x: Complex, s: Sequence[int]) -> Complex:
    s = _require(x, s)
    ss = set(s)
    out = []
    for t in x:
        if ss.isdisjoint(t) and tuple(sorted(ss.union(t))) in x:
            out.append(t)
    return Complex(out, closed=True)


def full_subcomplex(x: Complex, vs: Iterable[int]) -> Complex:
    vs = set(vs)
    extra = vs - x.vertices
    if extra:
        raise DomainError(f"vertices {sorted(extra)} are not in the complex")
    return Complex((s for s in x if vs.issuperset(s)), closed=True)


def complement(x: Complex, y: Complex) -> Complex:
    """Smallest subcomplex of ``x`` containing every simplex of ``x`` not in ``y``."""
    if not y.is_subcomplex_of(x):
        raise DomainError("second argument is not a subcomplex of the first")
    return Complex(x.simplices - y.simplices)


def one_ball(x: Complex, v: int, *, full: bool = True) -> Complex:
    """Closed 1-ball around ``v``.

    ``full=True`` gives the full subcomplex on ``v`` and its neighbours;
    ``full=False`` gives the closed star (union of simplices containing ``v``).
    """
    if v not in x.vertices:
        raise DomainError(f"vertex {v} is not in the complex")
    if full:
        return full_subcomplex(x, x.adjacency[v] | {v})
    return Complex(s for s in x if v in s)


def rips_complex(m: FiniteMetric, r: float, max_dim: int) -> Complex:
    if r < 0:
        raise InputError("scale must be non-negative")
    n = len(m.points)
    edges = [(m.points[i], m.points[j]) for i in range(n) for j in range(i + 1, n)
             if m.dist[i, j] <= r]
    return flag_complex(Graph(frozenset(m.points), frozenset(edges)), max_dim=max_dim)


def connected_components(x: Complex) -> list[list[int]]:
    """Vertex classes of the 1-skeleton, each sorted, ordered by least element."""
    seen: set[int] = set()
    out = []
    adj = x.adjacency
    for v in sorted(x.vertices):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def bfs_distances(x: Complex, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    adj = x.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist
