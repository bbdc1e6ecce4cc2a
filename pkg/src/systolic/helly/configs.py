"""Ready-made four-subcomplex configurations on corpus complexes."""

from __future__ import annotations

from ..complex import Complex, full_subcomplex, make_complex
from ..corpus import cone, grid_vertex, tetrahedron, tri_grid
from .model import HellyInput


def tetrahedron_faces() -> HellyInput:
    """X a tetrahedron, A_i the triangle opposite vertex i."""
    X = tetrahedron()
    return HellyInput(X, tuple(full_subcomplex(X, [u for u in range(4) if u != i])
                               for i in range(4)))


def _rhombus(n: int, corner, u, v, su: int, sv: int) -> list[int]:
    cx, cy = corner
    out = []
    for a in range(su + 1):
        for b in range(sv + 1):
            x, y = cx + a * u[0] + b * v[0], cy + a * u[1] + b * v[1]
            if 0 <= x <= n and 0 <= y <= n:
                out.append(grid_vertex(x, y, n))
    return out


def grid_sectors(n: int = 8) -> HellyInput:
    """Four rhombic patches of tri_grid(n, n) with no common vertex.

    A_0, A_1, A_2 are 120-degree rhombi with a common corner c at the centre,
    pairwise meeting along rays from c. A_3 is the rhombus of radius n/4
    around c with c removed, so it is an annulus. Every hypothesis holds
    (containment, connected A_i and A_i n A_j, nonempty triples) but A_3 is
    not simply connected.
    """
    X = tri_grid(n, n)
    h = n // 2
    c = (h, h)
    r = max(n // 4, 1)
    A0 = _rhombus(n, c, (1, 0), (0, 1), h, h)
    A1 = _rhombus(n, c, (0, 1), (-1, -1), h, h)
    A2 = _rhombus(n, c, (-1, -1), (1, 0), h, h)
    ring = [v for v in _rhombus(n, (h - r, h - r), (1, 0), (0, 1), 2 * r, 2 * r)
            if v != grid_vertex(h, h, n)]
    return HellyInput(X, tuple(full_subcomplex(X, vs) for vs in (A0, A1, A2, ring)))


def _boundary_cycle(n: int, lo: int, hi: int) -> list[int]:
    gv = lambda i, j: grid_vertex(i, j, n)  # noqa: E731
    cyc = [gv(i, lo) for i in range(lo, hi + 1)]
    cyc += [gv(hi, j) for j in range(lo + 1, hi + 1)]
    cyc += [gv(i, hi) for i in range(hi - 1, lo - 1, -1)]
    cyc += [gv(lo, j) for j in range(hi - 1, lo, -1)]
    return cyc


def cone_patch(n: int = 6, lo: int = 1, hi: int | None = None) -> HellyInput:
    """Cone over tri_grid(n, n) with apex c; A_3 a rhombic patch R, A_0..A_2 cones over
    three arcs splitting the boundary of R.

    X is systolic and every A_i is contractible. The only vertex shared by
    A_0, A_1, A_2 is c, which is not in R, so the quadruple intersection is empty.
    """
    hi = n - 1 if hi is None else hi
    X = cone(tri_grid(n, n))
    apex = max(X.vertices)
    R = [grid_vertex(i, j, n) for i in range(lo, hi + 1) for j in range(lo, hi + 1)]
    cyc = _boundary_cycle(n, lo, hi)
    m = len(cyc)
    cuts = [0, m // 3, (2 * m) // 3, m]
    arcs = [cyc[cuts[k]:cuts[k + 1] + 1] if k < 2 else cyc[cuts[2]:] + cyc[:1]
            for k in range(3)]
    A: list[Complex] = [make_complex((apex, a[k], a[k + 1]) for k in range(len(a) - 1))
                        for a in arcs]
    A.append(full_subcomplex(X, R))
    return HellyInput(X, tuple(A))
