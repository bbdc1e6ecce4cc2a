"""Triangulated 3-balls, Sperner colorings against a tetrahedral dual structure, rainbow search.

A dual structure on the boundary sphere of a ball mimics the boundary of a
tetrahedron: four apexes w_i, six arcs beta_ij joining them and four regions,
one for each triple of apexes. Each sphere vertex gets a role tag, the set of
colors it may carry: {i} for w_i, {i, j} on beta_ij, {i, j, k} inside region ijk.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import networkx as nx

from .complex import Complex, Simplex, as_simplex
from .errors import InputError
from .presentation import abelian_invariants, fundamental_group_presentation
from .surfaces import surface_problem

__all__ = [
    "Ball3",
    "Coloring",
    "DualStructure",
    "Verdict",
    "count_rainbow",
    "find_rainbow",
    "natural_dual_structure",
    "rainbow_tetrahedra",
    "random_admissible_coloring",
    "subdivided_tetra_instance",
    "validate_ball",
    "validate_coloring",
]

Coloring = dict[int, int]
COLORS = (0, 1, 2, 3)


@dataclass(frozen=True)
class Verdict:
    """Boolean result with a diagnostic; truthy iff ``ok``."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def fail(cls, reason: str) -> Verdict:
        return cls(False, reason)


@dataclass(frozen=True)
class Ball3:
    tetrahedra: tuple[Simplex, ...]
    boundary: Complex

    def __post_init__(self):
        object.__setattr__(self, "tetrahedra",
                           tuple(sorted(as_simplex(t) for t in self.tetrahedra)))

    @classmethod
    def from_tetrahedra(cls, tetrahedra) -> Ball3:
        """Ball whose boundary is read off the tetrahedra (faces used exactly once)."""
        tets = [as_simplex(t) for t in tetrahedra]
        count: dict[Simplex, int] = defaultdict(int)
        for t in tets:
            for f in combinations(t, 3):
                count[f] += 1
        return cls(tuple(tets), Complex(f for f, k in count.items() if k == 1))

    @cached_property
    def complex(self) -> Complex:
        return Complex(self.tetrahedra)

    @property
    def vertices(self) -> frozenset[int]:
        return self.complex.vertices

    @property
    def internal_vertices(self) -> frozenset[int]:
        return self.vertices - self.boundary.vertices


def validate_ball(b: Ball3, require_no_internal: bool = False) -> Verdict:
    """Check that ``b`` triangulates a 3-ball with the stated boundary sphere.

    Tests: interior triangles in exactly two tetrahedra, boundary triangles
    matching ``b.boundary``, a connected tetrahedron dual graph, a 2-sphere
    boundary, vertex links that are discs (boundary) or spheres (interior),
    Euler characteristic 1 and vanishing first homology. These are necessary
    conditions; together they exclude every non-ball a desk-scale input can be.
    """
    tets = b.tetrahedra
    if not tets:
        return Verdict.fail("no tetrahedra")
    for t in tets:
        if len(t) != 4:
            return Verdict.fail(f"{t} is not a tetrahedron")
    if len(set(tets)) != len(tets):
        return Verdict.fail("repeated tetrahedron")
    faces: dict[Simplex, list[int]] = defaultdict(list)
    for k, t in enumerate(tets):
        for f in combinations(t, 3):
            faces[f].append(k)
    outer = set()
    for f, ks in faces.items():
        if len(ks) > 2:
            return Verdict.fail(f"triangle {f} lies in {len(ks)} tetrahedra")
        if len(ks) == 1:
            outer.add(f)
    stated = set(b.boundary.triangles)
    if outer != stated or b.boundary != Complex(stated):
        extra = sorted(outer ^ stated)
        return Verdict.fail(f"boundary mismatch at triangle {extra[0] if extra else '?'}")
    dual = nx.Graph()
    dual.add_nodes_from(range(len(tets)))
    dual.add_edges_from(tuple(ks) for ks in faces.values() if len(ks) == 2)
    if not nx.is_connected(dual):
        return Verdict.fail("tetrahedra do not form a connected dual graph")
    problem = surface_problem(outer, closed=True)
    if problem:
        return Verdict.fail(f"boundary is not a 2-sphere: {problem}")
    bverts = b.boundary.vertices
    star: dict[int, list[Simplex]] = defaultdict(list)
    for t in tets:
        for v in t:
            star[v].append(tuple(u for u in t if u != v))
    for v, lk in sorted(star.items()):
        problem = surface_problem(lk, closed=v not in bverts)
        if problem:
            kind = "disc" if v in bverts else "sphere"
            return Verdict.fail(f"link of vertex {v} is not a {kind}: {problem}")
    x = b.complex
    if x.euler_characteristic() != 1:
        return Verdict.fail(f"Euler characteristic {x.euler_characteristic()}, expected 1")
    rank, torsion = abelian_invariants(fundamental_group_presentation(x, min(x.vertices)))
    if rank or torsion:
        return Verdict.fail("first homology is nonzero")
    if require_no_internal and b.internal_vertices:
        return Verdict.fail(f"internal vertex {min(b.internal_vertices)}")
    return Verdict(True)


@dataclass(frozen=True)
class DualStructure:
    """Apexes, arcs and regions on a 2-sphere, with per-vertex role tags.

    ``arcs[(i, j)]`` (i < j) is a vertex path from ``apexes[i]`` to
    ``apexes[j]``; ``regions[(i, j, k)]`` is the set of triangles of the
    region bounded by the arcs among those three apexes.
    """

    apexes: tuple[int, int, int, int]
    arcs: dict[tuple[int, int], tuple[int, ...]]
    regions: dict[tuple[int, int, int], frozenset[Simplex]]
    roles: dict[int, frozenset[int]] = field(default_factory=dict)

    @classmethod
    def build(cls, apexes, arcs, regions) -> DualStructure:
        apexes = tuple(apexes)
        arcs = {tuple(sorted(k)): tuple(p) for k, p in arcs.items()}
        regions = {tuple(sorted(k)): frozenset(as_simplex(t) for t in ts)
                   for k, ts in regions.items()}
        roles: dict[int, frozenset[int]] = {}
        for i, w in enumerate(apexes):
            roles[w] = frozenset({i})
        for (i, j), path in sorted(arcs.items()):
            for v in path:
                roles.setdefault(v, frozenset({i, j}))
        for key, ts in sorted(regions.items()):
            for t in sorted(ts):
                for v in t:
                    roles.setdefault(v, frozenset(key))
        return cls(apexes, arcs, regions, roles)

    def check(self, sphere: Complex) -> Verdict:
        """Structural invariants: arcs are simple, meet only at shared apexes, regions tile."""
        if len(set(self.apexes)) != 4:
            return Verdict.fail("apexes are not distinct")
        pairs = list(combinations(range(4), 2))
        if sorted(self.arcs) != pairs:
            return Verdict.fail("arcs must be indexed by the six pairs")
        for (i, j), path in self.arcs.items():
            if path[0] != self.apexes[i] or path[-1] != self.apexes[j]:
                return Verdict.fail(f"arc {i}{j} does not join its apexes")
            if len(set(path)) != len(path):
                return Verdict.fail(f"arc {i}{j} is not simple")
            for a, b in zip(path, path[1:]):
                if not sphere.spans((a, b)):
                    return Verdict.fail(f"arc {i}{j} uses non-edge {a}-{b}")
        for p, q in combinations(pairs, 2):
            common = set(self.arcs[p]) & set(self.arcs[q])
            shared = {self.apexes[i] for i in set(p) & set(q)}
            if common != shared:
                return Verdict.fail(f"arcs {p} and {q} meet at {sorted(common)}")
        if sorted(self.regions) != sorted(combinations(range(4), 3)):
            return Verdict.fail("regions must be indexed by the four triples")
        tiles = [t for ts in self.regions.values() for t in ts]
        if len(tiles) != len(set(tiles)) or set(tiles) != set(sphere.triangles):
            return Verdict.fail("regions do not partition the sphere's triangles")
        if set(self.roles) != set(sphere.vertices):
            return Verdict.fail("role tags do not cover the sphere")
        return Verdict(True)


def validate_coloring(b: Ball3, d: DualStructure, c: Coloring) -> Verdict:
    """Apex, arc and region rules on the boundary; any color inside."""
    missing = b.boundary.vertices - set(d.roles)
    if missing:
        raise InputError(f"dual structure does not cover boundary vertex {min(missing)}")
    for v in sorted(b.vertices):
        if v not in c:
            return Verdict.fail(f"vertex {v} is uncolored")
        if c[v] not in COLORS:
            return Verdict.fail(f"vertex {v} has color {c[v]} outside 0..3")
    for i, w in enumerate(d.apexes):
        if c.get(w) != i:
            return Verdict.fail(f"apex w{i}={w} has color {c.get(w)}, expected {i}")
    for v in sorted(b.boundary.vertices):
        if c[v] not in d.roles[v]:
            allowed = ",".join(map(str, sorted(d.roles[v])))
            return Verdict.fail(f"vertex {v} has color {c[v]}, allowed {{{allowed}}}")
    return Verdict(True)


def rainbow_tetrahedra(b: Ball3, c: Coloring) -> list[Simplex]:
    return [t for t in b.tetrahedra if {c.get(v) for v in t} == set(COLORS)]


def find_rainbow(b: Ball3, c: Coloring) -> Simplex | None:
    """First rainbow tetrahedron in sorted order, or None."""
    for t in b.tetrahedra:
        if {c.get(v) for v in t} == set(COLORS):
            return t
    return None


def count_rainbow(b: Ball3, c: Coloring) -> int:
    return sum(1 for t in b.tetrahedra if sorted(c.get(v, -1) for v in t) == [0, 1, 2, 3])


def natural_dual_structure(corners, edge_paths, face_triangles) -> DualStructure:
    """Dual structure of a subdivided tetrahedron boundary.

    ``corners[i]`` is the corner playing w_i, ``edge_paths[(i, j)]`` the
    subdivided edge between corners i and j, and ``face_triangles[(i, j, k)]``
    the triangles of the subdivided face spanned by corners i, j, k.
    """
    return DualStructure.build(corners, edge_paths, face_triangles)


def random_admissible_coloring(b: Ball3, d: DualStructure, rng) -> Coloring:
    """Uniform choice among allowed colors on the boundary, any color inside.

    ``rng`` is a :class:`random.Random`.
    """
    c = {}
    for v in sorted(b.vertices):
        allowed = sorted(d.roles[v]) if v in d.roles else list(COLORS)
        c[v] = rng.choice(allowed)
    return c


def subdivided_tetra_instance(rounds: int) -> tuple[Ball3, DualStructure]:
    """Barycentrically subdivided tetrahedron boundary, filled without internal vertices.

    The filling is the cone from corner 0 over the triangles missing it.
    Apexes are the original corners, arcs the subdivided edges, regions the
    subdivided faces.
    """
    from .subdivision import barycentric_moves, stellar

    tris = [(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)]
    carrier = {v: frozenset({v}) for v in range(4)}
    next_id = 4
    for _ in range(rounds):
        for sigma, new in barycentric_moves(tris, next_id):
            carrier[new] = frozenset().union(*(carrier[u] for u in sigma))
            tris = stellar(tris, sigma, new)
            next_id = new + 1
    sphere = Complex(tris)
    adj = sphere.adjacency
    arcs = {}
    for i, j in combinations(range(4), 2):
        on = {v for v, car in carrier.items() if car <= {i, j}}
        path, prev = [i], None
        while path[-1] != j:
            (nxt,) = [u for u in adj[path[-1]] & on if u != prev and u not in path]
            prev = path[-1]
            path.append(nxt)
        arcs[(i, j)] = path
    regions = {key: [t for t in tris if frozenset().union(*(carrier[v] for v in t)) <= set(key)]
               for key in combinations(range(4), 3)}
    ball = Ball3.from_tetrahedra((0,) + t for t in tris if 0 not in t)
    return ball, DualStructure.build(range(4), arcs, regions)
