"""Stellar moves on triangle and tetrahedron lists."""

from __future__ import annotations

from collections.abc import Iterable

from .complex import Simplex

__all__ = ["barycentric_moves", "stellar", "stellar_many"]


def stellar(cells: Iterable[Simplex], sigma: Simplex, new: int) -> list[Simplex]:
    """Stellar subdivision of ``sigma`` with new vertex ``new``.

    Every cell containing ``sigma`` is replaced by the cells obtained by
    swapping one vertex of ``sigma`` for ``new``; other cells are kept.
    Works for any dimension of cell.
    """
    s = set(sigma)
    out = []
    for c in cells:
        if s.issubset(c):
            for u in sigma:
                out.append(tuple(sorted((set(c) - {u}) | {new})))
        else:
            out.append(c)
    return out


def stellar_many(cells: Iterable[Simplex], moves) -> list[Simplex]:
    cells = list(cells)
    for sigma, new in moves:
        cells = stellar(cells, sigma, new)
    return cells


def barycentric_moves(triangles: Iterable[Simplex], next_id: int,
                      edges: Iterable[Simplex] | None = None) -> list[tuple[Simplex, int]]:
    """Moves realising the barycentric subdivision of a triangle set.

    Triangles are starred first, then the original edges (all of them, or
    only ``edges`` when given). Returns ``(simplex, new_vertex)`` pairs.
    """
    triangles = sorted(set(triangles))
    if edges is None:
        edges = {e for a, b, c in triangles for e in ((a, b), (a, c), (b, c))}
    moves = []
    for t in triangles:
        moves.append((t, next_id))
        next_id += 1
    for e in sorted(set(edges)):
        moves.append((e, next_id))
        next_id += 1
    return moves
