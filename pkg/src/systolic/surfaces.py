"""Combinatorial checks for triangulated surfaces given as triangle lists."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable

import networkx as nx

from .complex import Simplex

__all__ = ["edge_incidence", "surface_problem", "is_cycle_graph", "is_path_graph", "triangle_euler"]


def _edges_of(t: Simplex):
    a, b, c = t
    return (a, b), (a, c), (b, c)


def edge_incidence(triangles: Iterable[Simplex]) -> dict[Simplex, int]:
    count: dict[Simplex, int] = defaultdict(int)
    for t in triangles:
        for e in _edges_of(t):
            count[e] += 1
    return dict(count)


def triangle_euler(triangles: Iterable[Simplex]) -> int:
    triangles = list(triangles)
    vs = {v for t in triangles for v in t}
    return len(vs) - len(edge_incidence(triangles)) + len(triangles)


def is_cycle_graph(g: nx.Graph) -> bool:
    return (g.number_of_nodes() >= 3 and all(d == 2 for _, d in g.degree())
            and nx.is_connected(g))


def is_path_graph(g: nx.Graph) -> bool:
    n = g.number_of_nodes()
    if n < 2 or g.number_of_edges() != n - 1 or not nx.is_connected(g):
        return False
    return max(d for _, d in g.degree()) <= 2


def surface_problem(triangles: Iterable[Simplex], *, closed: bool) -> str | None:
    """Why the triangles fail to form a 2-sphere (``closed``) or a 2-disc; None if they do.

    Checks edge incidences, vertex links, connectivity and Euler characteristic.
    For a closed surface this pins down the sphere; for a surface with boundary,
    one boundary circle plus Euler characteristic 1 pins down the disc.
    """
    triangles = sorted(set(triangles))
    if not triangles:
        return "no triangles"
    inc = edge_incidence(triangles)
    for e, k in inc.items():
        if k > 2 or (closed and k != 2):
            return f"edge {e} lies in {k} triangles"
    links: dict[int, nx.Graph] = defaultdict(nx.Graph)
    for a, b, c in triangles:
        links[a].add_edge(b, c)
        links[b].add_edge(a, c)
        links[c].add_edge(a, b)
    for v, lk in sorted(links.items()):
        if closed and not is_cycle_graph(lk):
            return f"link of vertex {v} is not a cycle"
        if not closed and not (is_cycle_graph(lk) or is_path_graph(lk)):
            return f"link of vertex {v} is neither a cycle nor a path"
    g = nx.Graph()
    for t in triangles:
        g.add_edges_from(_edges_of(t))
    if not nx.is_connected(g):
        return "not connected"
    chi = triangle_euler(triangles)
    if closed and chi != 2:
        return f"Euler characteristic {chi}, expected 2"
    if not closed:
        if chi != 1:
            return f"Euler characteristic {chi}, expected 1"
        bd = nx.Graph([e for e, k in inc.items() if k == 1])
        if not is_cycle_graph(bd):
            return "boundary is not a single circle"
    return None
