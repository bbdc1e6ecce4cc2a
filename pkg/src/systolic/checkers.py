"""Largeness, SD2* and simple-connectedness checks, and the combined report."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, fields
from itertools import combinations

from .complex import Complex, connected_components, is_flag, link
from .errors import DomainError, InputError
from .presentation import (Presentation, abelian_invariants, fundamental_group_presentation,
                           simplify)
from .tristate import TriState

__all__ = [
    "Classification",
    "FullCycle",
    "WheelWithPendant",
    "classify",
    "enumerate_full_cycles",
    "enumerate_wheels_with_pendant",
    "find_sd2star_violation",
    "fundamental_group_presentation",
    "has_sd2star_links",
    "is_k_large",
    "is_locally_k_large",
    "is_simply_connected_bounded",
    "satisfies_sd2star",
]

DEFAULT_EFFORT = 10_000


@dataclass(frozen=True)
class FullCycle:
    """Induced cycle; ``vertices`` starts at its least vertex, second < last."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class WheelWithPendant:
    hub: int
    rim: tuple[int, ...]
    pendant: int
    attach: tuple[int, int]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.rim) | {self.hub, self.pendant}


def enumerate_full_cycles(x: Complex, max_len: int) -> list[FullCycle]:
    """Full cycles of length 3..max_len, each once, sorted.

    DFS over induced paths whose start is the least vertex of the cycle.
    A 3-cycle counts only when its triangle is missing from ``x``.
    """
    if max_len < 3:
        raise InputError(f"max_len must be >= 3, got {max_len}")
    adj = x.adjacency
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        s, last = path[0], path[-1]
        for v in sorted(adj[last]):
            if v <= s or v in on_path:
                continue
            if any(v in adj[u] for u in path[1:-1]):
                continue
            if v in adj[s]:
                # closes an induced cycle; extending further would leave a chord to s
                if path[1] < v and (len(path) > 2 or (s, path[1], v) not in x):
                    found.append(tuple(path) + (v,))
                continue
            if len(path) + 2 <= max_len:
                path.append(v)
                on_path.add(v)
                extend(path, on_path)
                path.pop()
                on_path.discard(v)

    for s in sorted(x.vertices):
        for p1 in sorted(adj[s]):
            if p1 > s:
                extend([s, p1], {s, p1})
    return [FullCycle(c) for c in sorted(found)]


def _check_k(k: int) -> None:
    if k < 4:
        raise InputError(f"largeness parameter must be >= 4, got {k}")


def is_k_large(x: Complex, k: int, *, assume_flag: bool = False) -> bool:
    _check_k(k)
    if not assume_flag and not is_flag(x):
        raise DomainError("k-largeness is defined for flag complexes only")
    return not enumerate_full_cycles(x, k - 1)


def _links(x: Complex) -> Iterator[tuple[tuple[int, ...], Complex]]:
    for s in sorted(x.simplices):
        yield s, link(x, s)


def find_local_full_cycle(x: Complex, k: int) -> tuple[tuple[int, ...], FullCycle] | None:
    """A simplex whose link has a full cycle shorter than ``k``, with that cycle."""
    _check_k(k)
    for s, lk in _links(x):
        if len(lk.vertices) < 3:
            continue
        cycles = enumerate_full_cycles(lk, k - 1)
        if cycles:
            return s, cycles[0]
    return None


def is_locally_k_large(x: Complex, k: int, *, assume_flag: bool = False) -> bool:
    if not assume_flag and not is_flag(x):
        raise DomainError("local largeness is defined for flag complexes only")
    return find_local_full_cycle(x, k) is None


def _rim_cycles(x: Complex, hub: int, k: int) -> Iterator[tuple[int, ...]]:
    """Simple k-cycles (chords allowed) among the neighbours of ``hub``."""
    adj = x.adjacency
    nbrs = adj[hub]

    def extend(path: list[int], on_path: set[int]) -> Iterator[tuple[int, ...]]:
        s, last = path[0], path[-1]
        for v in sorted(adj[last] & nbrs):
            if v <= s or v in on_path:
                continue
            if len(path) + 1 == k:
                if v in adj[s] and path[1] < v:
                    yield tuple(path) + (v,)
                continue
            path.append(v)
            on_path.add(v)
            yield from extend(path, on_path)
            path.pop()
            on_path.discard(v)

    for s in sorted(nbrs):
        for p1 in sorted(adj[s] & nbrs):
            if p1 > s:
                yield from extend([s, p1], {s, p1})


def iter_wheels_with_pendant(x: Complex, k: int, *,
                             strict: bool = True) -> Iterator[WheelWithPendant]:
    """Embedded (not necessarily induced) k-wheels with a pendant vertex.

    With ``strict`` the two attaching rim vertices must be adjacent, so the
    pendant spans a triangle with them; otherwise any two rim vertices do.
    """
    if k < 4:
        raise InputError(f"wheel size must be >= 4, got {k}")
    adj = x.adjacency
    for hub in sorted(x.vertices):
        for rim in _rim_cycles(x, hub, k):
            body = set(rim) | {hub}
            for a, b in combinations(sorted(rim), 2):
                if strict and b not in adj[a]:
                    continue
                for p in sorted(adj[a] & adj[b]):
                    if p not in body:
                        yield WheelWithPendant(hub, rim, p, (a, b))


def enumerate_wheels_with_pendant(x: Complex, k: int, *,
                                  strict: bool = True) -> list[WheelWithPendant]:
    return list(iter_wheels_with_pendant(x, k, strict=strict))


def _common_ball_center(x: Complex, vs) -> int | None:
    adj = x.adjacency
    common = None
    for v in vs:
        closed = adj[v] | {v}
        common = closed if common is None else common & closed
        if not common:
            return None
    return min(common) if common else None


def find_sd2star_violation(x: Complex, *, strict: bool = True):
    """First obstruction to SD2*, or None.

    Returns ``("local", simplex, cycle)`` when a link has a full 3- or 4-cycle,
    or ``("wheel", wheel)`` for a 5-wheel with pendant outside every 1-ball.
    """
    if not is_flag(x):
        raise DomainError("SD2* is defined for flag complexes only")
    local = find_local_full_cycle(x, 5)
    if local is not None:
        return ("local",) + local
    checked: set[frozenset[int]] = set()
    for w in iter_wheels_with_pendant(x, 5, strict=strict):
        vs = w.vertex_set
        if vs in checked:
            continue
        checked.add(vs)
        if _common_ball_center(x, vs) is None:
            return ("wheel", w)
    return None


def satisfies_sd2star(x: Complex, *, strict: bool = True) -> bool:
    return find_sd2star_violation(x, strict=strict) is None


def has_sd2star_links(x: Complex, *, strict: bool = True) -> bool:
    if not is_flag(x):
        raise DomainError("SD2* is defined for flag complexes only")
    return all(satisfies_sd2star(lk, strict=strict) for _, lk in _links(x))


def is_simply_connected_bounded(x: Complex, effort: int = DEFAULT_EFFORT) -> TriState:
    """No when first homology is nonzero; Yes when Tietze moves trivialise the group.

    Unknown when ``effort`` moves do not suffice.
    """
    if len(connected_components(x)) != 1:
        raise DomainError("complex is not connected")
    pres = fundamental_group_presentation(x, min(x.vertices))
    free_rank, torsion = abelian_invariants(pres)
    if free_rank or torsion:
        return TriState.NO
    simplified, _ = simplify(pres, effort)
    return TriState.YES if simplified.is_trivial() else TriState.UNKNOWN


@dataclass(frozen=True)
class Classification:
    flag: TriState
    locally_5_large: TriState
    locally_6_large: TriState
    sd2star: TriState
    sd2star_links: TriState
    simply_connected: TriState
    systolic: TriState
    weakly_systolic: TriState
    vertices: int = 0
    simplices: int = 0
    dimension: int = -1

    def record(self) -> dict[str, str]:
        """One key per verdict, values Y / N / Unknown."""
        return {f.name: getattr(self, f.name).code for f in fields(self)
                if isinstance(getattr(self, f.name), TriState)}

    def machine(self) -> str:
        return "\n".join(f"{k}={v}" for k, v in self.record().items())

    def text(self) -> str:
        lines = [f"complex: {self.vertices} vertices, {self.simplices} simplices, "
                 f"dimension {self.dimension}"]
        for k, v in self.record().items():
            lines.append(f"  {k.replace('_', ' '):<18} {v}")
        return "\n".join(lines)


def classify(x: Complex, effort: int = DEFAULT_EFFORT) -> Classification:
    """Every verdict at once. Largeness and SD2* are No for non-flag input."""
    flag = is_flag(x)
    if flag:
        loc5 = is_locally_k_large(x, 5, assume_flag=True)
        loc6 = loc5 and is_locally_k_large(x, 6, assume_flag=True)
        sd2 = satisfies_sd2star(x)
        sd2_links = has_sd2star_links(x)
    else:
        loc5 = loc6 = sd2 = sd2_links = False
    if len(connected_components(x)) == 1:
        sc = is_simply_connected_bounded(x, effort)
    else:
        sc = TriState.NO
    return Classification(
        flag=TriState.of(flag),
        locally_5_large=TriState.of(loc5),
        locally_6_large=TriState.of(loc6),
        sd2star=TriState.of(sd2),
        sd2star_links=TriState.of(sd2_links),
        simply_connected=sc,
        systolic=TriState.of(loc6) & sc,
        weakly_systolic=TriState.of(sd2) & sc,
        vertices=len(x.vertices),
        simplices=len(x),
        dimension=x.dimension,
    )


__all__ += ["Presentation", "find_local_full_cycle", "iter_wheels_with_pendant"]
