"""Disc fillings of closed edge paths by greedy contraction toward a base vertex.

The boundary polygon of the unfilled region shrinks by two moves:

* ear: three consecutive polygon vertices whose images span a simplex are
  cut off by one triangle (the new chord must not already be an edge);
* fan: a farthest vertex x is replaced by a path through its link whose
  vertices are strictly closer to the base, with fresh abstract vertices.

Both moves shrink the multiset of base distances of the polygon, so a run
always stops, either with a filling or stuck. Stuck runs restart from
another base vertex.
"""

from __future__ import annotations

from collections import deque

from ..complex import Complex, bfs_distances
from ..errors import InputError, InternalError
from ..surfaces import surface_problem
from .model import DiscFilling, Unknown

__all__ = ["fill_disc", "verify_disc"]


def _check_boundary(target: Complex, boundary) -> None:
    if not boundary:
        raise InputError("boundary path is empty")
    for v in boundary:
        if v not in target.vertices:
            raise InputError(f"boundary vertex {v} is not in the target")
    n = len(boundary)
    for k in range(n):
        a, b = boundary[k], boundary[(k + 1) % n]
        if a != b and not target.spans((a, b)):
            raise InputError(f"boundary step {a}-{b} is not an edge of the target")


def verify_disc(target: Complex, d: DiscFilling) -> str | None:
    """Why ``d`` is not a disc filling into ``target``; None if it is."""
    for t in d.triangles:
        if not target.spans(d.phi[v] for v in t):
            return f"triangle {t} does not map to a simplex"
    if any(d.phi[v] not in target.vertices for v in d.phi):
        return "image vertex outside the target"
    if len(d.boundary) < 3:
        return None if not d.triangles else "degenerate boundary with triangles"
    problem = surface_problem(d.triangles, closed=False)
    if problem:
        return problem
    bd = {tuple(sorted(e)) for e in zip(d.boundary, d.boundary[1:] + d.boundary[:1])}
    count: dict = {}
    for a, b, c in d.triangles:
        for e in ((a, b), (a, c), (b, c)):
            count[e] = count.get(e, 0) + 1
    if {e for e, k in count.items() if k == 1} != bd:
        return "boundary circle differs from the prescribed boundary"
    return None


def _fan_path(target: Complex, dist, x, left, right, d):
    """Shortest y_1..y_r (r >= 1) with images closer than ``d`` joining left to right around x."""
    nbrs = target.adjacency[x]
    allowed = sorted(y for y in nbrs if dist.get(y, d) < d)
    starts = [y for y in allowed if target.spans((left, x, y))]
    prev = {y: None for y in starts}
    queue = deque(starts)
    while queue:
        y = queue.popleft()
        if target.spans((y, x, right)):
            path = [y]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in allowed:
            if w not in prev and target.spans((x, y, w)):
                prev[w] = y
                queue.append(w)
    return None


def _attempt(target: Complex, boundary, base: int, max_area: int):
    dist = bfs_distances(target, base)
    if any(v not in dist for v in boundary):
        return None
    n = len(boundary)
    img = dict(enumerate(boundary))
    poly = list(range(n))
    edges = {tuple(sorted((k, (k + 1) % n))) for k in range(n)}
    tris = []
    fresh = n
    while True:
        if len(tris) > max_area:
            return None
        m = len(poly)
        best = None
        for idx in range(m):
            a, p, c = poly[idx - 1], poly[idx], poly[(idx + 1) % m]
            if not target.spans((img[a], img[p], img[c])):
                continue
            if m > 3 and tuple(sorted((a, c))) in edges:
                continue
            key = (-dist[img[p]], idx)
            if best is None or key < best[0]:
                best = (key, idx)
        if best is not None:
            idx = best[1]
            a, p, c = poly[idx - 1], poly[idx], poly[(idx + 1) % m]
            tris.append(tuple(sorted((a, p, c))))
            if m == 3:
                return tris, img
            edges.add(tuple(sorted((a, c))))
            poly.pop(idx)
            continue
        for idx in sorted(range(m), key=lambda k: (-dist[img[poly[k]]], k)):
            p = poly[idx]
            d = dist[img[p]]
            if d == 0:
                return None
            a, c = poly[idx - 1], poly[(idx + 1) % m]
            path = _fan_path(target, dist, img[p], img[a], img[c], d)
            if path is None:
                continue
            new = list(range(fresh, fresh + len(path)))
            fresh += len(path)
            for u, y in zip(new, path):
                img[u] = y
            chain = [a] + new + [c]
            for u, w in zip(chain, chain[1:]):
                tris.append(tuple(sorted((p, u, w))))
                edges.add(tuple(sorted((u, w))))
            for u in new:
                edges.add(tuple(sorted((p, u))))
            poly[idx:idx + 1] = new
            break
        else:
            return None


def _base_order(target: Complex, boundary) -> list[int]:
    """Candidate base vertices: most central with respect to the boundary first."""
    marks = sorted(set(boundary))
    far = {v: 0 for v in target.vertices}
    for b in marks:
        db = bfs_distances(target, b)
        for v in far:
            far[v] = max(far[v], db.get(v, len(far) + 1))
    return sorted(far, key=lambda v: (far[v], v))


def fill_disc(target: Complex, boundary, max_area: int, base_points: int = 6):
    """A :class:`DiscFilling` of the closed edge path ``boundary`` inside ``target``.

    Consecutive boundary entries may repeat (a collapsed edge). Returns
    :class:`Unknown` when no base vertex among the first ``base_points``
    candidates leads to a filling of at most ``max_area`` triangles.
    """
    boundary = tuple(boundary)
    _check_boundary(target, boundary)
    n = len(boundary)
    if n < 3:
        return DiscFilling((), dict(enumerate(boundary)), tuple(range(n)))
    for base in _base_order(target, boundary)[:base_points]:
        res = _attempt(target, boundary, base, max_area)
        if res is None:
            continue
        tris, img = res
        disc = DiscFilling(tuple(sorted(tris)), img, tuple(range(n)))
        problem = verify_disc(target, disc)
        if problem:
            raise InternalError(f"disc filling failed verification: {problem}")
        return disc
    return Unknown("fill_disc", f"no filling of area <= {max_area} found "
                                f"from {base_points} base vertices")
