"""Named test complexes: cycles, platonic spheres, triangular grids, cones."""

from __future__ import annotations

from itertools import product

from .complex import Complex, make_complex
from .errors import InputError

__all__ = [
    "cone",
    "cycle",
    "deg7_patch",
    "generate",
    "grid_vertex",
    "icosahedron",
    "octahedron",
    "tetra_boundary",
    "tetrahedron",
    "tri_grid",
]


def cycle(n: int) -> Complex:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return make_complex((i, (i + 1) % n) for i in range(n))


def octahedron() -> Complex:
    """Boundary of the octahedron; antipodal pairs are (0,1), (2,3), (4,5)."""
    return make_complex(product((0, 1), (2, 3), (4, 5)))


def icosahedron() -> Complex:
    upper = [1 + k for k in range(5)]
    lower = [6 + k for k in range(5)]
    tris = []
    for k in range(5):
        k1 = (k + 1) % 5
        tris += [
            (0, upper[k], upper[k1]),
            (upper[k], upper[k1], lower[k]),
            (upper[k1], lower[k], lower[k1]),
            (11, lower[k], lower[k1]),
        ]
    return make_complex(tris)


def tetrahedron() -> Complex:
    return make_complex([(0, 1, 2, 3)])


def tetra_boundary() -> Complex:
    return make_complex([(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)])


def grid_vertex(i: int, j: int, w: int) -> int:
    """Id of the lattice point (i, j) in ``tri_grid(w, h)``."""
    return j * (w + 1) + i


def tri_grid(w: int, h: int) -> Complex:
    """A w-by-h patch of the equilateral triangulation of the plane.

    Lattice points (i, j), 0 <= i <= w, 0 <= j <= h, are joined along the
    directions (1, 0), (0, 1) and (1, 1); interior vertices have degree 6.
    """
    if w < 1 or h < 1:
        raise InputError(f"tri_grid needs w, h >= 1, got {w}, {h}")
    tris = []
    for i in range(w):
        for j in range(h):
            a = grid_vertex(i, j, w)
            b = grid_vertex(i + 1, j, w)
            c = grid_vertex(i + 1, j + 1, w)
            d = grid_vertex(i, j + 1, w)
            tris += [(a, b, c), (a, c, d)]
    return make_complex(tris)


def deg7_patch(radius: int) -> Complex:
    """Ball of the given radius in the order-7 triangulation of the hyperbolic plane.

    Grown ring by ring: each boundary vertex receives enough new triangles
    to reach degree 7, so every interior vertex has degree exactly 7.
    """
    if radius < 1:
        raise InputError(f"deg7_patch needs radius >= 1, got {radius}")
    tris = [(0, 1 + k, 1 + (k + 1) % 7) for k in range(7)]
    ring = list(range(1, 8))
    count = {v: 2 for v in ring}
    next_id = 8
    for _ in range(radius - 1):
        m = len(ring)
        new_ring: list[int] = []
        new_count: dict[int, int] = {}
        # the new vertex shared by ring[i] and ring[i+1]; ring[-1]'s is created first
        first_shared = next_id
        next_id += 1
        shared_prev = first_shared
        for idx, v in enumerate(ring):
            k = 6 - count[v]
            if k < 1:
                raise InputError("deg7_patch growth failed (vertex already saturated)")
            fan = [shared_prev]
            for _ in range(k - 2):
                fan.append(next_id)
                next_id += 1
            if idx == m - 1:
                fan.append(first_shared)
            else:
                fan.append(next_id)
                next_id += 1
            for a, b in zip(fan, fan[1:]):
                tris.append((v, a, b))
            nxt = ring[(idx + 1) % m]
            tris.append((v, nxt, fan[-1]))
            for u in fan[:-1]:
                if u not in new_count:
                    new_ring.append(u)
                    new_count[u] = 0
            shared_prev = fan[-1]
        for t in tris:
            for u in t:
                if u in new_count:
                    new_count[u] += 1
        ring = new_ring
        count = new_count
    return make_complex(tris)


def cone(base: Complex, apex: int | None = None) -> Complex:
    """Join of ``base`` with a new vertex (default: one more than the largest id)."""
    if apex is None:
        apex = max(base.vertices, default=-1) + 1
    if apex in base.vertices:
        raise InputError(f"apex {apex} already in the base")
    return make_complex([s + (apex,) for s in base] + [(apex,)])


_NULLARY = {
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "tetra_boundary": tetra_boundary,
    "tetrahedron": tetrahedron,
}


def generate(name: str, *params) -> Complex:
    """Build a corpus complex by name.

    ``cone`` takes another corpus name and its parameters, e.g.
    ``generate("cone", "cycle", 5)``.
    """
    try:
        if name in _NULLARY:
            if params:
                raise InputError(f"{name} takes no parameters")
            return _NULLARY[name]()
        if name == "cycle":
            (n,) = params
            return cycle(int(n))
        if name == "tri_grid":
            w, h = params
            return tri_grid(int(w), int(h))
        if name == "deg7_patch":
            (r,) = params
            return deg7_patch(int(r))
        if name == "cone":
            if not params:
                raise InputError("cone needs a base complex name")
            base = params[0]
            if isinstance(base, Complex):
                return cone(base)
            return cone(generate(base, *params[1:]))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad parameters for {name}: {params!r}") from exc
    raise InputError(f"unknown corpus name {name!r}")
