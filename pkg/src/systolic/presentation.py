"""Edge-path presentations of fundamental groups and bounded Tietze simplification.

Words are lists of non-zero integers: generator ``g`` (1-based) is ``g`` and
its inverse is ``-g``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .complex import Complex, connected_components
from .errors import DomainError

__all__ = [
    "Presentation",
    "abelian_invariants",
    "fundamental_group_presentation",
    "simplify",
]

Word = tuple[int, ...]


def free_reduce(word) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word) -> Word:
    w = list(free_reduce(word))
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def inverse(word) -> Word:
    return tuple(-x for x in reversed(word))


def _canonical(word: Word) -> Word:
    """Least rotation of the word or its inverse; equal for conjugate-or-inverse relators."""
    if not word:
        return word
    cands = []
    for w in (word, inverse(word)):
        cands.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(cands)


@dataclass
class Presentation:
    generators: list[int]
    relators: list[Word] = field(default_factory=list)
    # Edge (u, v), u < v, that each generator stands for; empty after simplification.
    edge_of: dict[int, tuple[int, int]] = field(default_factory=dict)

    def is_trivial(self) -> bool:
        return not self.generators

    def __str__(self) -> str:
        gens = ", ".join(f"g{g}" for g in self.generators)
        rels = ", ".join(
            " ".join(f"g{abs(x)}" + ("^-1" if x < 0 else "") for x in r) or "1"
            for r in self.relators)
        return f"< {gens} | {rels} >"


def fundamental_group_presentation(x: Complex, basepoint: int) -> Presentation:
    """Edge-path group presentation relative to a BFS spanning tree.

    Generators are the edges outside the tree; there is one relator per
    triangle (trivial letters dropped, so some relators may be empty).
    """
    if basepoint not in x.vertices:
        raise DomainError(f"basepoint {basepoint} is not a vertex")
    if len(connected_components(x)) != 1:
        raise DomainError("complex is not connected")
    tree: set[tuple[int, int]] = set()
    seen = {basepoint}
    queue = deque([basepoint])
    while queue:
        u = queue.popleft()
        for w in x.neighbors(u):
            if w not in seen:
                seen.add(w)
                tree.add((min(u, w), max(u, w)))
                queue.append(w)
    gen_of: dict[tuple[int, int], int] = {}
    for e in x.edges:
        if e not in tree:
            gen_of[e] = len(gen_of) + 1

    def letter(a: int, b: int) -> list[int]:
        if a < b:
            g = gen_of.get((a, b))
            return [g] if g else []
        g = gen_of.get((b, a))
        return [-g] if g else []

    relators = []
    for a, b, c in x.triangles:
        relators.append(tuple(letter(a, b) + letter(b, c) + letter(c, a)))
    return Presentation(
        generators=list(gen_of.values()),
        relators=relators,
        edge_of={g: e for e, g in gen_of.items()},
    )


def abelian_invariants(p: Presentation) -> tuple[int, list[int]]:
    """Free rank and torsion coefficients (>1) of the abelianised group."""
    index = {g: i for i, g in enumerate(p.generators)}
    n = len(index)
    rows = []
    for r in p.relators:
        row = [0] * n
        for x in r:
            row[index[abs(x)]] += 1 if x > 0 else -1
        if any(row):
            rows.append(row)
    diag = _smith_diagonal(rows, n)
    rank = sum(1 for d in diag if d != 0)
    torsion = [abs(d) for d in diag if abs(d) > 1]
    return n - rank, torsion


def _smith_diagonal(rows: list[list[int]], ncols: int) -> list[int]:
    """Diagonal of a Smith-like normal form over the integers.

    Only the multiset of non-unit entries matters to the caller, so the
    divisibility chain is not enforced.
    """
    m = [r[:] for r in rows]
    diag = []
    col_alive = list(range(ncols))
    while m and col_alive:
        best = None
        for i, r in enumerate(m):
            for j in col_alive:
                if r[j] and (best is None or abs(r[j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
                    if abs(r[j]) == 1:
                        break
            if best and abs(m[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        pi, pj = best
        while True:
            piv = m[pi][pj]
            changed = False
            for i, r in enumerate(m):
                if i != pi and r[pj]:
                    q = r[pj] // piv
                    if q:
                        for j in col_alive:
                            r[j] -= q * m[pi][j]
                    if r[pj]:
                        changed = True
            for j in col_alive:
                if j != pj and m[pi][j]:
                    q = m[pi][j] // piv
                    if q:
                        for r in m:
                            r[j] -= q * r[pj]
                    if m[pi][j]:
                        changed = True
            if not changed:
                break
            # move the pivot to the smallest remaining entry in its row/column
            cands = [(abs(m[i][pj]), i, pj) for i in range(len(m)) if m[i][pj]]
            cands += [(abs(m[pi][j]), pi, j) for j in col_alive if m[pi][j]]
            _, pi, pj = min(cands)
        diag.append(m[pi][pj])
        m.pop(pi)
        col_alive.remove(pj)
        m = [r for r in m if any(r[j] for j in col_alive)]
    return diag


def simplify(p: Presentation, effort: int) -> tuple[Presentation, int]:
    """Apply at most ``effort`` Tietze moves; return the result and moves used.

    Moves: cyclic reduction, dropping empty or duplicate relators, and
    eliminating a generator that occurs exactly once in some relator.
    """
    gens = set(p.generators)
    rels = [cyclic_reduce(r) for r in p.relators]
    moves = 0
    while moves < effort:
        before = len(rels)
        uniq: dict[Word, Word] = {}
        for r in rels:
            if r:
                uniq.setdefault(_canonical(r), r)
        rels = list(uniq.values())
        moves += before - len(rels)
        if moves >= effort:
            break
        # a generator that appears in no relator cannot be removed
        target = None
        for r in sorted(rels, key=len):
            counts: dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            once = [g for g, c in counts.items() if c == 1]
            if once:
                target = (r, min(once))
                break
        if target is None:
            break
        r, g = target
        k = next(i for i, x in enumerate(r) if abs(x) == g)
        # r = u g^e v  =>  g^e = u^-1 v^-1
        u, v = r[:k], r[k + 1:]
        value = inverse(v) + inverse(u)
        if r[k] < 0:
            value = inverse(value)
        rels.remove(r)
        gens.discard(g)
        new_rels = []
        for s in rels:
            if any(abs(x) == g for x in s):
                w: list[int] = []
                for x in s:
                    if x == g:
                        w.extend(value)
                    elif x == -g:
                        w.extend(inverse(value))
                    else:
                        w.append(x)
                s = cyclic_reduce(w)
            new_rels.append(s)
        rels = new_rels
        moves += 1
    rels = [r for r in rels if r]
    return Presentation(sorted(gens), rels), moves
