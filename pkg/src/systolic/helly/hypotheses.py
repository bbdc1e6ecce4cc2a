"""Hypothesis checks, the trivial case, corner selection and connecting paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce
from itertools import combinations

from ..checkers import classify
from ..complex import Complex, connected_components
from ..errors import HypothesisError, InputError
from ..tristate import TriState
from .model import HellyCertificate, HellyInput, others


@dataclass(frozen=True)
class HypothesisReport:
    ok: bool
    failure: str = ""
    witness: object = None
    systolic: TriState | None = None

    def __bool__(self) -> bool:
        return self.ok


def _meet(complexes) -> Complex:
    return reduce(Complex.intersection, complexes)


def check_hypotheses(inp: HellyInput, advisory: bool = True) -> HypothesisReport:
    """Containment, connectivity of each A_i and A_i n A_j, nonempty triples.

    With ``advisory`` the systolicity of X is reported too; it never affects ``ok``.
    """
    X, A = inp.X, inp.A
    systolic = classify(X, inp.budgets.effort).systolic if advisory else None

    def fail(msg, witness):
        return HypothesisReport(False, msg, witness, systolic)

    if len(A) != 4:
        return fail(f"expected four subcomplexes, got {len(A)}", len(A))
    for i, a in enumerate(A):
        if not a.is_subcomplex_of(X):
            bad = min(a.simplices - X.simplices)
            return fail(f"A{i} is not a subcomplex of X", (i, bad))
    for i, a in enumerate(A):
        comps = connected_components(a)
        if len(comps) != 1:
            return fail(f"A{i} is not connected ({len(comps)} components)", (i, comps))
    for i, j in combinations(range(4), 2):
        comps = connected_components(A[i].intersection(A[j]))
        if len(comps) != 1:
            return fail(f"A{i} n A{j} is not connected ({len(comps)} components)",
                        ((i, j), comps))
    for l in range(4):
        idx = others(l)
        if not _meet(A[m] for m in idx).vertices:
            return fail(f"A{idx[0]} n A{idx[1]} n A{idx[2]} is empty", idx)
    return HypothesisReport(True, systolic=systolic)


def trivial_case(inp: HellyInput) -> HellyCertificate | None:
    common = _meet(inp.A).vertices
    if not common:
        return None
    v = min(common)
    return HellyCertificate.make(inp.X, inp.A, (v, v, v, v), trivial=True)


def pick_triple_points(inp: HellyInput) -> tuple[int, int, int, int]:
    """z_l = least vertex common to the three A's other than A_l."""
    z = []
    for l in range(4):
        idx = others(l)
        common = _meet(inp.A[m] for m in idx).vertices
        if not common:
            raise HypothesisError(f"A{idx[0]} n A{idx[1]} n A{idx[2]} is empty", idx)
        z.append(min(common))
    return tuple(z)


def connect_path(region: Complex, a: int, b: int) -> tuple[int, ...]:
    """Shortest edge path in ``region``; BFS visiting neighbours in increasing order."""
    if a not in region.vertices or b not in region.vertices:
        raise InputError(f"endpoints {a}, {b} must be vertices of the region")
    prev = {a: None}
    queue = deque([a])
    while queue and b not in prev:
        u = queue.popleft()
        for w in region.neighbors(u):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    if b not in prev:
        raise HypothesisError(f"{a} and {b} lie in different components", (a, b))
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return tuple(reversed(path))
