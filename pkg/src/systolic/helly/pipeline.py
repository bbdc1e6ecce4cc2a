"""The Helly construction end to end, and the independent certificate check."""

from __future__ import annotations

from ..complex import Complex
from ..errors import HypothesisError, InternalError
from ..sperner import Ball3, Coloring, DualStructure, Verdict, find_rainbow, validate_coloring
from .ball import fill_ball, verify_ball_filling
from .disc import fill_disc, verify_disc
from .hypotheses import check_hypotheses, connect_path, pick_triple_points, trivial_case
from .model import PAIRS, HellyCertificate, HellyInput, Unknown, others
from .sphere import assemble_sphere, disc_boundary, dualize, pad_gamma

__all__ = ["helly_point", "sperner_color", "verify_certificate", "verify_witnesses"]


def sperner_color(b: Ball3, d: DualStructure, A, phi) -> Coloring:
    """Lowest admissible color c with phi(v) in A_c, per vertex role."""
    coloring = {}
    for v in sorted(b.vertices):
        allowed = sorted(d.roles.get(v, range(4)))
        for c in allowed:
            if phi[v] in A[c].vertices:
                coloring[v] = c
                break
        else:
            raise InternalError(f"vertex {v} (image {phi[v]}) has no admissible color "
                                f"among {allowed}")
    return coloring


def helly_point(inp: HellyInput):
    """A verified :class:`HellyCertificate`, or :class:`Unknown` on budget exhaustion."""
    report = check_hypotheses(inp, advisory=False)
    if not report:
        raise HypothesisError(report.failure, report.witness)
    cert = trivial_case(inp)
    if cert is not None:
        return cert
    X, A, bud = inp.X, inp.A, inp.budgets
    z = pick_triple_points(inp)
    gamma = {}
    for k, l in PAIRS:
        i, j = others(k, l)
        gamma[(k, l)] = pad_gamma(connect_path(A[i].intersection(A[j]), z[k], z[l]))
    discs = {}
    for i in range(4):
        d = fill_disc(A[i], disc_boundary(z, gamma, i), bud.max_area, bud.base_points)
        if isinstance(d, Unknown):
            return Unknown(d.stage, f"disc {i}: {d.reason}")
        discs[i] = d
    sphere = assemble_sphere(z, gamma, discs)
    sphere, dual = dualize(sphere)
    filling = fill_ball(X, sphere, bud.ball_budget, bud.base_points)
    if isinstance(filling, Unknown):
        return filling
    coloring = sperner_color(filling.ball, dual, A, filling.phi)
    verdict = validate_coloring(filling.ball, dual, coloring)
    if not verdict:
        raise InternalError(f"coloring violates the rules: {verdict.reason}")
    tet = find_rainbow(filling.ball, coloring)
    if tet is None:
        raise InternalError("no rainbow tetrahedron in a valid coloring")
    by_color = {coloring[u]: filling.phi[u] for u in tet}
    return HellyCertificate.make(
        X, A, tuple(by_color[c] for c in range(4)),
        assembly=sphere, discs=discs, ball=filling.ball, phi=filling.phi,
        dual=dual, coloring=coloring, rainbow=tet)


def verify_certificate(X: Complex, A, simplex) -> Verdict:
    """Reads only X, the four A's and the four vertices."""
    simplex = tuple(simplex)
    if len(simplex) != 4:
        return Verdict.fail(f"expected 4 vertices, got {len(simplex)}")
    for i, v in enumerate(simplex):
        if v not in A[i].vertices:
            return Verdict.fail(f"v{i}={v} is not a vertex of A{i}")
    if not X.spans(simplex):
        return Verdict.fail(f"{sorted(set(simplex))} does not span a simplex of X")
    return Verdict(True)


def verify_witnesses(inp: HellyInput, cert: HellyCertificate) -> Verdict:
    """Re-check every intermediate object a non-trivial certificate carries."""
    verdict = verify_certificate(inp.X, inp.A, cert.simplex)
    if not verdict or cert.trivial:
        return verdict
    X, A = inp.X, inp.A
    for i, d in cert.discs.items():
        problem = verify_disc(A[i], d)
        if problem:
            return Verdict.fail(f"disc {i}: {problem}")
    s = cert.assembly
    if s.sphere.euler_characteristic() != 2:
        return Verdict.fail("sphere has Euler characteristic != 2")
    for t, i in s.disc_of.items():
        if not A[i].spans(s.phi[u] for u in t):
            return Verdict.fail(f"sphere triangle {t} of disc {i} does not map into A{i}")
    verdict = verify_ball_filling(X, s, cert.ball, cert.phi)
    if not verdict:
        return verdict
    verdict = cert.dual.check(s.sphere)
    if not verdict:
        return verdict
    verdict = validate_coloring(cert.ball, cert.dual, cert.coloring)
    if not verdict:
        return verdict
    for u, c in cert.coloring.items():
        if cert.phi[u] not in A[c].vertices:
            return Verdict.fail(f"vertex {u} colored {c} maps outside A{c}")
    colors = sorted(cert.coloring[u] for u in cert.rainbow)
    if colors != [0, 1, 2, 3] or cert.rainbow not in cert.ball.tetrahedra:
        return Verdict.fail("rainbow tetrahedron is not rainbow")
    return Verdict(True)
