"""Data carried through the Helly construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..complex import Complex, Simplex
from ..errors import InternalError
from ..sperner import Ball3, Coloring, DualStructure

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def others(*idx: int) -> tuple[int, ...]:
    """The indices in 0..3 not listed."""
    return tuple(m for m in range(4) if m not in idx)


@dataclass(frozen=True)
class Budgets:
    max_area: int = 4000      # triangles per disc filling
    ball_budget: int = 50_000  # link triangulations attempted while filling the ball
    effort: int = 10_000      # Tietze moves for the advisory classification
    base_points: int = 6      # restarts (distinct base vertices) per search


@dataclass(frozen=True)
class HellyInput:
    X: Complex
    A: tuple[Complex, Complex, Complex, Complex]
    budgets: Budgets = Budgets()

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(self.A))


@dataclass(frozen=True)
class Unknown:
    """Budget exhaustion; never a negative answer."""

    stage: str
    reason: str

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"Unknown ({self.stage}: {self.reason})"


@dataclass(frozen=True)
class DiscFilling:
    """Triangulated disc with a simplicial map into a target complex.

    ``boundary`` lists the abstract boundary vertices in cyclic order; a
    boundary of fewer than three vertices is the degenerate, triangle-free disc.
    """

    triangles: tuple[Simplex, ...]
    phi: dict[int, int]
    boundary: tuple[int, ...]

    @property
    def area(self) -> int:
        return len(self.triangles)

    @property
    def interior(self) -> frozenset[int]:
        return frozenset(self.phi) - set(self.boundary)


@dataclass(frozen=True)
class SphereAssembly:
    """Sphere glued from four discs, with its map into X.

    Abstract vertices 0..3 are the corners (mapping to ``z``). ``gamma_tilde``
    holds the glued copies of the gamma paths and ``disc_of`` assigns each
    triangle to its disc. ``base_triangles`` is the sphere as first glued;
    ``moves`` are the stellar subdivisions applied since, in order.
    """

    z: tuple[int, int, int, int]
    gamma: dict[tuple[int, int], tuple[int, ...]]
    gamma_tilde: dict[tuple[int, int], tuple[int, ...]]
    disc_of: dict[Simplex, int]
    phi: dict[int, int]
    base_triangles: tuple[Simplex, ...] = ()
    moves: tuple[tuple[Simplex, int], ...] = ()

    @property
    def triangles(self) -> list[Simplex]:
        return sorted(self.disc_of)

    @cached_property
    def sphere(self) -> Complex:
        return Complex(self.disc_of)

    def disc_triangles(self, i: int) -> list[Simplex]:
        return sorted(t for t, d in self.disc_of.items() if d == i)

    @property
    def base_phi(self) -> dict[int, int]:
        vs = {v for t in self.base_triangles for v in t}
        return {v: self.phi[v] for v in vs}


@dataclass(frozen=True)
class BallFilling:
    ball: Ball3
    phi: dict[int, int]


@dataclass(frozen=True)
class HellyCertificate:
    simplex: tuple[int, int, int, int]
    membership: tuple[bool, bool, bool, bool]
    trivial: bool = False
    assembly: SphereAssembly | None = None
    discs: dict[int, DiscFilling] = field(default_factory=dict)
    ball: Ball3 | None = None
    phi: dict[int, int] | None = None
    dual: DualStructure | None = None
    coloring: Coloring | None = None
    rainbow: Simplex | None = None

    @classmethod
    def make(cls, X: Complex, A, simplex, **witnesses) -> HellyCertificate:
        """Build a certificate, re-checking membership and spanning first."""
        simplex = tuple(int(v) for v in simplex)
        membership = tuple(simplex[i] in A[i].vertices for i in range(4))
        if not all(membership) or not X.spans(simplex):
            raise InternalError(f"certificate {simplex} fails verification")
        return cls(simplex, membership, **witnesses)

    def text(self) -> str:
        lines = [" ".join(map(str, self.simplex))]
        for i, v in enumerate(self.simplex):
            lines.append(f"  v{i} = {v}  in A{i}: {'yes' if self.membership[i] else 'no'}")
        lines.append("  trivial case" if self.trivial
                     else f"  rainbow tetrahedron {' '.join(map(str, self.rainbow))}")
        return "\n".join(lines)
