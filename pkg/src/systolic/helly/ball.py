"""Filling a mapped 2-sphere by a 3-ball without internal vertices.

The ball is built by vertex elimination: a sphere vertex v is removed and
the polygon left by its star is triangulated (dynamic programming over
chords) so that v together with each new triangle maps onto a simplex of X.
The cone from v over that triangulation becomes part of the ball and the
sphere shrinks by one vertex, down to the boundary of a single tetrahedron.
Chords already present on the sphere are forbidden, which keeps every
intermediate complex a sphere.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from ..complex import Complex, Simplex, bfs_distances
from ..errors import InputError, InternalError
from ..sperner import Ball3, Verdict, validate_ball
from ..subdivision import stellar_many
from .model import BallFilling, SphereAssembly, Unknown

__all__ = ["fill_ball", "fill_sphere", "verify_ball_filling"]


def _link_polygon(tris: set[Simplex], v: int) -> list[int] | None:
    nxt: dict[int, list[int]] = defaultdict(list)
    for t in tris:
        if v in t:
            a, b = (u for u in t if u != v)
            nxt[a].append(b)
            nxt[b].append(a)
    if not nxt or any(len(x) != 2 for x in nxt.values()):
        return None
    start = min(nxt)
    poly = [start, min(nxt[start])]
    while True:
        a, b = nxt[poly[-1]]
        nxt_v = a if a != poly[-2] else b
        if nxt_v == start:
            break
        poly.append(nxt_v)
    return poly if len(poly) == len(nxt) else None


def _triangulate(X: Complex, phi, v: int, poly: list[int], edges: set[Simplex]):
    """Triangles on ``poly`` coning with v onto simplices of X; None if impossible."""
    m = len(poly)
    pv = phi[v]
    img = [phi[u] for u in poly]

    def chord_ok(i, j):
        if j - i == 1 or (i == 0 and j == m - 1):
            return True
        return tuple(sorted((poly[i], poly[j]))) not in edges

    @lru_cache(maxsize=None)
    def solve(i, j):
        if j - i == 1:
            return ()
        if not chord_ok(i, j):
            return None
        for k in range(i + 1, j):
            if not X.spans((pv, img[i], img[k], img[j])):
                continue
            left = solve(i, k)
            if left is None:
                continue
            right = solve(k, j)
            if right is None:
                continue
            return left + right + (tuple(sorted((poly[i], poly[k], poly[j]))),)
        return None

    return solve(0, m - 1)


def _edges(tris) -> set[Simplex]:
    return {e for a, b, c in tris for e in ((a, b), (a, c), (b, c))}


def _eliminate(X: Complex, triangles, phi, order_key, budget: list[int]):
    tris = set(triangles)
    tets: list[Simplex] = []
    while True:
        verts = sorted({u for t in tris for u in t})
        if len(verts) == 4:
            if not X.spans(phi[u] for u in verts):
                return None
            tets.append(tuple(verts))
            return tets
        edges = _edges(tris)
        for v in sorted(verts, key=order_key):
            budget[0] -= 1
            if budget[0] < 0:
                return None
            poly = _link_polygon(tris, v)
            if poly is None:
                raise InternalError(f"link of {v} in the shrinking sphere is not a cycle")
            fill = _triangulate(X, phi, v, poly, edges)
            if fill is None:
                continue
            tris = {t for t in tris if v not in t} | set(fill)
            tets.extend(tuple(sorted((v,) + t)) for t in fill)
            break
        else:
            return None


def fill_sphere(X: Complex, triangles, phi, budget: int, base_points: int = 6):
    """Tetrahedra filling the sphere ``triangles`` without internal vertices, or Unknown.

    Restarts order the eliminations by decreasing distance of the image from
    a sequence of base vertices in X; ``budget`` bounds the total number of
    link triangulations tried.
    """
    triangles = sorted(set(triangles))
    verts = sorted({u for t in triangles for u in t})
    for t in triangles:
        if not X.spans(phi[u] for u in t):
            raise InputError(f"sphere triangle {t} does not map to a simplex of X")
    images = sorted({phi[u] for u in verts})
    ecc = {}
    for y in images:
        d = bfs_distances(X, y)
        ecc[y] = max(d.get(w, len(X.vertices)) for w in images)
    bases = sorted(images, key=lambda y: (ecc[y], y))[:base_points]
    remaining = [budget]
    for base in bases:
        dist = bfs_distances(X, base)
        key = (lambda u, dist=dist: (-dist.get(phi[u], 0), u))
        tets = _eliminate(X, triangles, phi, key, remaining)
        if tets is not None:
            return tets
        if remaining[0] < 0:
            break
    return Unknown("fill_ball", f"no filling without internal vertices within budget {budget}")


def fill_ball(X: Complex, s: SphereAssembly, budget: int, base_points: int = 6):
    """Ball filling of the assembly's sphere, as a verified :class:`BallFilling`.

    The unsubdivided sphere is filled first; the assembly's stellar moves are
    then replayed on the tetrahedra, which subdivides the ball consistently
    with its boundary and creates no internal vertex.
    """
    for t in s.triangles:
        if not X.spans(s.phi[u] for u in t):
            raise InputError(f"sphere triangle {t} does not map to a simplex of X")
    tets = fill_sphere(X, s.base_triangles, s.phi, budget, base_points)
    if isinstance(tets, Unknown):
        return tets
    tets = stellar_many(tets, s.moves)
    ball = Ball3.from_tetrahedra(tets)
    verdict = verify_ball_filling(X, s, ball, s.phi)
    if not verdict:
        raise InternalError(f"ball filling failed verification: {verdict.reason}")
    return BallFilling(ball, dict(s.phi))


def verify_ball_filling(X: Complex, s: SphereAssembly, b: Ball3, phi) -> Verdict:
    """Ball without internal vertices, bounded by the sphere, mapping simplicially into X."""
    verdict = validate_ball(b, require_no_internal=True)
    if not verdict:
        return verdict
    if b.boundary != s.sphere:
        return Verdict.fail("ball boundary differs from the sphere")
    for v in s.sphere.vertices:
        if phi.get(v) != s.phi[v]:
            return Verdict.fail(f"map disagrees with the sphere map at {v}")
    for t in b.tetrahedra:
        if any(u not in phi for u in t):
            return Verdict.fail(f"tetrahedron {t} has an unmapped vertex")
        if not X.spans(phi[u] for u in t):
            return Verdict.fail(f"tetrahedron {t} does not map to a simplex of X")
    return Verdict(True)
