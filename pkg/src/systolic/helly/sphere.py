"""Gluing four disc fillings into a sphere, and the dual tetrahedral structure on it."""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations

import networkx as nx

from ..complex import Simplex
from ..errors import InternalError
from ..sperner import DualStructure
from ..subdivision import barycentric_moves, stellar
from ..surfaces import surface_problem
from .model import PAIRS, DiscFilling, SphereAssembly, others

__all__ = ["assemble_sphere", "disc_boundary", "dualize", "pad_gamma"]

MAX_SUBDIVISION_ROUNDS = 3


def pad_gamma(path) -> tuple[int, ...]:
    """A zero-length path z becomes the collapsed edge z-z, so every gamma has an edge."""
    path = tuple(path)
    return path * 2 if len(path) == 1 else path


def _disc_sides(i: int):
    """The three gamma keys around disc i, oriented j->k, k->l, l->j (j < k < l)."""
    j, k, l = others(i)
    return [((j, k), False), ((k, l), False), ((j, l), True)]


def disc_boundary(z, gamma, i: int) -> tuple[int, ...]:
    """Closed edge path in X bounding disc i: gamma_jk, gamma_kl, then gamma_jl backwards."""
    out: list[int] = []
    for key, rev in _disc_sides(i):
        path = gamma[key][::-1] if rev else gamma[key]
        out.extend(path[:-1])
    return tuple(out)


def _sphere_problem(triangles) -> str | None:
    return surface_problem(triangles, closed=True)


def assemble_sphere(z, gamma, discs: dict[int, DiscFilling]) -> SphereAssembly:
    """Glue the discs along shared copies of the gamma paths.

    Corners get abstract ids 0..3, interior gamma vertices and interior disc
    vertices fresh ids. When two discs carry the same chord between vertices
    of their common gamma, the chord is starred in the later disc, its new
    vertex mapping to the least image of the chord's ends.
    """
    z = tuple(z)
    gamma = {k: pad_gamma(gamma[k]) for k in PAIRS}
    phi = {c: z[c] for c in range(4)}
    next_id = 4
    gt = {}
    for k, l in PAIRS:
        path = gamma[(k, l)]
        if path[0] != z[k] or path[-1] != z[l]:
            raise InternalError(f"gamma {k}{l} does not join z{k} to z{l}")
        ids = [k]
        for v in path[1:-1]:
            ids.append(next_id)
            phi[next_id] = v
            next_id += 1
        ids.append(l)
        gt[(k, l)] = tuple(ids)

    disc_tris: dict[int, list[Simplex]] = {}
    for i in range(4):
        d = discs[i]
        ring: list[int] = []
        for key, rev in _disc_sides(i):
            ids = gt[key][::-1] if rev else gt[key]
            ring.extend(ids[:-1])
        expected = disc_boundary(z, gamma, i)
        if len(ring) != len(d.boundary) or tuple(d.phi[b] for b in d.boundary) != expected:
            raise InternalError(f"disc {i} boundary does not match its gammas")
        local = dict(zip(d.boundary, ring))
        for v in sorted(d.interior):
            local[v] = next_id
            phi[next_id] = d.phi[v]
            next_id += 1
        disc_tris[i] = [tuple(sorted(local[v] for v in t)) for t in d.triangles]

    for i, j in PAIRS:
        shared = set(gt[others(i, j)])
        chords = [_inner_edges(disc_tris[m], shared) for m in (i, j)]
        for e in sorted(chords[0] & chords[1]):
            disc_tris[j] = stellar(disc_tris[j], e, next_id)
            phi[next_id] = min(phi[e[0]], phi[e[1]])
            next_id += 1

    disc_of = {t: i for i, ts in disc_tris.items() for t in ts}
    triangles = [t for ts in disc_tris.values() for t in ts]
    if len(disc_of) != len(triangles):
        raise InternalError("two discs share a triangle")
    problem = _sphere_problem(triangles)
    if problem:
        raise InternalError(f"assembled complex is not a sphere: {problem}")
    return SphereAssembly(z, gamma, gt, disc_of, phi, tuple(sorted(disc_of)), ())


def _inner_edges(triangles, among) -> set[Simplex]:
    count: dict[Simplex, int] = defaultdict(int)
    for a, b, c in triangles:
        for e in ((a, b), (a, c), (b, c)):
            count[e] += 1
    return {e for e, k in count.items() if k == 2 and set(e) <= among}


class _Work:
    """Mutable copy of an assembly that records stellar moves."""

    def __init__(self, s: SphereAssembly):
        self.s = s
        self.disc_of = dict(s.disc_of)
        self.phi = dict(s.phi)
        self.gt = {k: list(v) for k, v in s.gamma_tilde.items()}
        self.moves = list(s.moves)
        self.next_id = max(self.phi) + 1

    def star(self, sigma: Simplex) -> int:
        new = self.next_id
        self.next_id += 1
        self.phi[new] = min(self.phi[v] for v in sigma)
        for t in [t for t in self.disc_of if set(sigma) <= set(t)]:
            d = self.disc_of.pop(t)
            for u in stellar([t], sigma, new):
                self.disc_of[u] = d
        if len(sigma) == 2:
            a, b = sigma
            for path in self.gt.values():
                for k in range(len(path) - 1):
                    if {path[k], path[k + 1]} == {a, b}:
                        path.insert(k + 1, new)
                        break
        self.moves.append((sigma, new))
        return new

    def disc_tris(self, i: int) -> list[Simplex]:
        return sorted(t for t, d in self.disc_of.items() if d == i)

    def rim(self, i: int) -> set[int]:
        return {v for key in combinations(others(i), 2) for v in self.gt[key]}

    def done(self) -> SphereAssembly:
        s = self.s
        return SphereAssembly(s.z, s.gamma, {k: tuple(v) for k, v in self.gt.items()},
                              self.disc_of, self.phi, s.base_triangles, tuple(self.moves))


def _spokes(work: _Work, i: int, targets: dict[tuple[int, int], int]):
    """Apex w_i interior to disc i with three disjoint spokes to the target vertices.

    Spoke interiors avoid the disc boundary. Found by unit-capacity max-flow
    with split vertices, trying interior apexes in increasing order.
    """
    tris = work.disc_tris(i)
    rim = work.rim(i)
    inner = sorted({v for t in tris for v in t} - rim)
    adj: dict[int, set[int]] = defaultdict(set)
    for a, b, c in tris:
        for u, v in ((a, b), (a, c), (b, c)):
            adj[u].add(v)
            adj[v].add(u)
    for w in inner:
        g = nx.DiGraph()
        for v in inner:
            g.add_edge(("in", v), ("out", v), capacity=1)
            for u in adj[v]:
                if u in rim:
                    continue
                g.add_edge(("out", v), ("in", u), capacity=1)
        for key, t in targets.items():
            for v in adj[t]:
                if v not in rim:
                    g.add_edge(("out", v), ("arc", key), capacity=1)
            g.add_edge(("arc", key), "sink", capacity=1)
        if not g.has_node("sink"):
            return None
        value, flow = nx.maximum_flow(g, ("out", w), "sink")
        if value < 3:
            continue
        spokes = {}
        for key, t in targets.items():
            # walk back from the arc node along saturated edges
            path = [t]
            node = ("arc", key)
            while node != ("out", w):
                (pred,) = [u for u in g.predecessors(node) if flow[u][node] > 0.5]
                if pred[0] == "out":
                    path.append(pred[1])
                    node = ("in", pred[1]) if pred[1] != w else ("out", w)
                else:
                    node = pred
            spokes[key] = path[::-1]
        return w, spokes
    return None


def dualize(s: SphereAssembly) -> tuple[SphereAssembly, DualStructure]:
    """Apexes w_i inside each disc, arcs beta_ij and the four regions.

    beta_ij runs from w_i through disc i to a middle vertex of the gamma that
    discs i and j share, then through disc j to w_j. Gammas with a single
    edge are subdivided first; a disc without a suitable apex is subdivided
    barycentrically (relative to its boundary) and searched again. New
    vertices map to the least image among the corners of the starred simplex.
    Returns the possibly subdivided assembly together with the structure.
    """
    work = _Work(s)
    for key in PAIRS:
        path = work.gt[key]
        if len(path) == 2:
            work.star(tuple(sorted(path)))
    apex: dict[int, int] = {}
    spokes: dict[int, dict] = {}
    for i in range(4):
        for _ in range(MAX_SUBDIVISION_ROUNDS + 1):
            mids = {}
            for j in others(i):
                path = work.gt[others(i, j)]
                mids[tuple(sorted((i, j)))] = path[len(path) // 2]
            found = _spokes(work, i, mids)
            if found:
                apex[i], spokes[i] = found
                break
            tris = work.disc_tris(i)
            rim = work.rim(i)
            inner_edges = {e for a, b, c in tris for e in ((a, b), (a, c), (b, c))
                           if not set(e) <= rim}
            inner_edges |= _inner_edges(tris, rim)
            for sigma, _new in barycentric_moves(tris, work.next_id, inner_edges):
                work.star(sigma)
        else:
            raise InternalError(f"no apex with three spokes in disc {i}")
    arcs = {}
    for i, j in PAIRS:
        a = spokes[i][(i, j)]
        b = spokes[j][(i, j)]
        arcs[(i, j)] = tuple(a + b[::-1][1:])
    regions = _regions(work.disc_of, arcs, [apex[i] for i in range(4)])
    out = work.done()
    dual = DualStructure.build([apex[i] for i in range(4)], arcs, regions)
    verdict = dual.check(out.sphere)
    if not verdict:
        raise InternalError(f"dual structure invalid: {verdict.reason}")
    return out, dual


def _regions(disc_of, arcs, apexes):
    cut = {tuple(sorted(e)) for p in arcs.values() for e in zip(p, p[1:])}
    by_edge: dict[Simplex, list[Simplex]] = defaultdict(list)
    for t in disc_of:
        a, b, c = t
        for e in ((a, b), (a, c), (b, c)):
            by_edge[e].append(t)
    g = nx.Graph()
    g.add_nodes_from(disc_of)
    for e, ts in by_edge.items():
        if e not in cut and len(ts) == 2:
            g.add_edge(*ts)
    regions = {}
    for comp in nx.connected_components(g):
        touched = tuple(sorted(i for i, w in enumerate(apexes)
                               if any(w in t for t in comp)))
        if len(touched) != 3 or touched in regions:
            raise InternalError(f"region touching apexes {touched} is malformed")
        regions[touched] = comp
    if len(regions) != 4:
        raise InternalError(f"expected 4 regions, found {len(regions)}")
    return regions
