"""Line-based text formats.

Every format is UTF-8, one record per line, ``#`` starts a comment.

* complex:    ``s v1 v2 ... vk``          (the loader takes the face closure)
* ball:       ``t v1 v2 v3 v4`` and ``bt v1 v2 v3``
* coloring:   ``c v color``
* vertex map: ``m v x``
* dual:       ``w i v``, ``a i j v ... v``, ``r i j k a b c``
* certificate: ``v i x`` for i = 0..3
"""

from __future__ import annotations

from pathlib import Path

from .complex import Complex, make_complex
from .errors import InputError
from .sperner import Ball3, DualStructure

__all__ = [
    "dump_ball",
    "dump_certificate",
    "dump_coloring",
    "dump_complex",
    "dump_dual",
    "dump_map",
    "load_ball",
    "load_certificate",
    "load_coloring",
    "load_complex",
    "load_dual",
    "load_map",
    "load_subcomplex",
    "parse_complex",
]


def _records(text: str, tags: dict[str, tuple[int, int | None]]):
    """Yield (line number, tag, ints); ``tags`` maps tag -> (min, max) argument count."""
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *rest = line.split()
        if tag not in tags:
            raise InputError(f"unknown record type {tag!r}", line=n)
        lo, hi = tags[tag]
        if len(rest) < lo or (hi is not None and len(rest) > hi):
            raise InputError(f"record {tag!r} takes {lo}..{hi or 'any'} integers, "
                             f"got {len(rest)}", line=n)
        try:
            vals = [int(x) for x in rest]
        except ValueError:
            raise InputError(f"non-integer token in {line!r}", line=n) from None
        if any(v < 0 for v in vals):
            raise InputError("negative value", line=n)
        yield n, tag, vals


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _checked_simplex(vals, n):
    if len(set(vals)) != len(vals):
        raise InputError(f"duplicate vertex in simplex {vals}", line=n)
    return vals


def parse_complex(text: str) -> Complex:
    simplices = [_checked_simplex(v, n) for n, _, v in _records(text, {"s": (1, None)})]
    return make_complex(simplices)


def load_complex(path) -> Complex:
    return parse_complex(_read(path))


def load_subcomplex(path, ambient: Complex) -> Complex:
    sub = load_complex(path)
    if not sub.is_subcomplex_of(ambient):
        bad = min(sub.simplices - ambient.simplices)
        raise InputError(f"{path}: simplex {bad} is not in the ambient complex")
    return sub


def dump_complex(x: Complex) -> str:
    return "".join("s " + " ".join(map(str, s)) + "\n" for s in x.maximal_simplices)


def parse_ball(text: str) -> Ball3:
    tets, bts = [], []
    for n, tag, vals in _records(text, {"t": (4, 4), "bt": (3, 3)}):
        (tets if tag == "t" else bts).append(_checked_simplex(vals, n))
    if not bts:
        return Ball3.from_tetrahedra(tets)
    return Ball3(tuple(tuple(t) for t in tets), make_complex(bts))


def load_ball(path) -> Ball3:
    return parse_ball(_read(path))


def dump_ball(b: Ball3) -> str:
    lines = ["t " + " ".join(map(str, t)) for t in b.tetrahedra]
    lines += ["bt " + " ".join(map(str, t)) for t in b.boundary.triangles]
    return "\n".join(lines) + "\n"


def _pairs(text: str, tag: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for n, _, (v, x) in _records(text, {tag: (2, 2)}):
        if v in out:
            raise InputError(f"vertex {v} listed twice", line=n)
        out[v] = x
    return out


def parse_coloring(text: str) -> dict[int, int]:
    c = _pairs(text, "c")
    for v, col in c.items():
        if col > 3:
            raise InputError(f"color {col} of vertex {v} is outside 0..3")
    return c


def load_coloring(path) -> dict[int, int]:
    return parse_coloring(_read(path))


def dump_coloring(c) -> str:
    return "".join(f"c {v} {c[v]}\n" for v in sorted(c))


def load_map(path) -> dict[int, int]:
    return _pairs(_read(path), "m")


def dump_map(phi) -> str:
    return "".join(f"m {v} {phi[v]}\n" for v in sorted(phi))


def parse_dual(text: str) -> DualStructure:
    apexes: dict[int, int] = {}
    arcs: dict[tuple[int, int], list[int]] = {}
    regions: dict[tuple[int, int, int], list] = {}
    for n, tag, vals in _records(text, {"w": (2, 2), "a": (4, None), "r": (6, 6)}):
        if tag == "w":
            apexes[vals[0]] = vals[1]
        elif tag == "a":
            arcs[(vals[0], vals[1])] = vals[2:]
        else:
            regions.setdefault(tuple(sorted(vals[:3])), []).append(tuple(vals[3:]))
    if sorted(apexes) != [0, 1, 2, 3]:
        raise InputError("dual structure needs apexes w 0..3")
    return DualStructure.build([apexes[i] for i in range(4)], arcs, regions)


def load_dual(path) -> DualStructure:
    return parse_dual(_read(path))


def dump_dual(d: DualStructure) -> str:
    lines = [f"w {i} {w}" for i, w in enumerate(d.apexes)]
    lines += [f"a {i} {j} " + " ".join(map(str, p)) for (i, j), p in sorted(d.arcs.items())]
    for key, ts in sorted(d.regions.items()):
        lines += [" ".join(map(str, ("r",) + key + t)) for t in sorted(ts)]
    return "\n".join(lines) + "\n"


def load_certificate(path) -> tuple[int, int, int, int]:
    vs = _pairs(_read(path), "v")
    if sorted(vs) != [0, 1, 2, 3]:
        raise InputError("certificate needs records v 0..3")
    return tuple(vs[i] for i in range(4))


def dump_certificate(simplex) -> str:
    return "".join(f"v {i} {v}\n" for i, v in enumerate(simplex))
