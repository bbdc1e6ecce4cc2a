"""Brute-force oracles and random generators shared by the tests.

Nothing here calls the package's search code; the oracles recompute
answers from definitions on small inputs.
"""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from systolic.complex import Complex, Graph, flag_complex, full_subcomplex, make_complex
from systolic.corpus import cone, grid_vertex, tri_grid


def naive_full_cycles(x: Complex, max_len: int) -> set[frozenset[int]]:
    """Vertex sets S, 3 <= |S| <= max_len, whose full subcomplex is a cycle."""
    out = set()
    verts = sorted(x.vertices)
    for k in range(3, max_len + 1):
        for s in combinations(verts, k):
            sub = full_subcomplex(x, s)
            if sub.dimension > 1:
                continue
            g = sub.nx_graph()
            if nx.is_connected(g) and all(d == 2 for _, d in g.degree()):
                out.add(frozenset(s))
    return out


def naive_cliques(g: Graph) -> set[tuple[int, ...]]:
    verts = sorted(g.vertices)
    out = set()
    for k in range(1, len(verts) + 1):
        found = False
        for s in combinations(verts, k):
            if all((a, b) in g.edges for a, b in combinations(s, 2)):
                out.add(s)
                found = True
        if not found:
            break
    return out


def random_graph(rng: random.Random, n_max: int = 9) -> Graph:
    n = rng.randint(3, n_max)
    p = rng.uniform(0.2, 0.8)
    edges = [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p]
    return Graph(frozenset(range(n)), frozenset(edges))


def random_flag(rng: random.Random, n_max: int = 9) -> Complex:
    return flag_complex(random_graph(rng, n_max))


def random_complex(rng: random.Random, n_max: int = 10) -> Complex:
    n = rng.randint(1, n_max)
    simplices = []
    for _ in range(rng.randint(1, 8)):
        k = rng.randint(1, min(4, n))
        simplices.append(rng.sample(range(n), k))
    return make_complex(simplices)


def random_subcomplex(rng: random.Random, x: Complex) -> Complex:
    chosen = [s for s in sorted(x.simplices) if rng.random() < 0.3]
    return make_complex(chosen)


def rhombus(w: int, h: int, rng: random.Random) -> list[int]:
    """Vertices of a random lattice parallelogram inside tri_grid(w, h)."""
    dirs = [(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)]
    while True:
        u, v = rng.sample(dirs, 2)
        if u[0] == -v[0] and u[1] == -v[1]:
            continue
        cx, cy = rng.randint(0, w), rng.randint(0, h)
        su, sv = rng.randint(0, 3), rng.randint(0, 3)
        pts = []
        for a in range(su + 1):
            for b in range(sv + 1):
                x, y = cx + a * u[0] + b * v[0], cy + a * u[1] + b * v[1]
                if 0 <= x <= w and 0 <= y <= h:
                    pts.append(grid_vertex(x, y, w))
        if pts:
            return pts


def random_helly_sets(rng: random.Random, max_side: int = 6):
    """(X, four subcomplexes) on tri_grid(w, h) or its cone, w, h <= max_side.

    The four sets are random rhombic patches; on a cone each may also be the
    cone over its patch. Hypotheses are not guaranteed; callers filter.
    """
    w, h = rng.randint(1, max_side), rng.randint(1, max_side)
    grid = tri_grid(w, h)
    coned = rng.random() < 0.5
    X = cone(grid) if coned else grid
    apex = max(X.vertices)
    A = []
    for _ in range(4):
        pts = rhombus(w, h, rng)
        if coned and rng.random() < 0.6:
            pts = pts + [apex]
        A.append(full_subcomplex(X, pts))
    return X, A


def random_cone_patch(rng: random.Random, max_side: int = 6):
    """(X, four subcomplexes) with empty quadruple intersection.

    X is the cone over tri_grid(w, h). One set is a rectangular lattice patch
    R; the other three are cones over three arcs cut at random points of the
    boundary cycle of R. The roles are shuffled among the indices.
    """
    w, h = rng.randint(1, max_side), rng.randint(1, max_side)
    X = cone(tri_grid(w, h))
    apex = max(X.vertices)
    x0, x1 = sorted(rng.sample(range(w + 1), 2))
    y0, y1 = sorted(rng.sample(range(h + 1), 2))
    cyc = [(i, y0) for i in range(x0, x1 + 1)] + [(x1, j) for j in range(y0 + 1, y1 + 1)]
    cyc += [(i, y1) for i in range(x1 - 1, x0 - 1, -1)] + [(x0, j) for j in range(y1 - 1, y0, -1)]
    cyc = [grid_vertex(i, j, w) for i, j in cyc]
    a, b, c = sorted(rng.sample(range(len(cyc)), 3))
    arcs = [cyc[a:b + 1], cyc[b:c + 1], cyc[c:] + cyc[:a + 1]]
    sets = [make_complex((apex, p, q) for p, q in zip(arc, arc[1:])) for arc in arcs]
    patch = [grid_vertex(i, j, w) for i in range(x0, x1 + 1) for j in range(y0, y1 + 1)]
    sets.append(full_subcomplex(X, patch))
    rng.shuffle(sets)
    return X, sets
