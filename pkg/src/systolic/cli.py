"""Command line: classify complexes, run the Helly construction, generate the corpus,
check Sperner instances and re-verify certificates.

Exit codes: 0 success, 1 input error, 2 hypothesis failure, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import io
from .checkers import DEFAULT_EFFORT, classify
from .corpus import generate
from .errors import DomainError, HypothesisError, InputError
from .helly import Budgets, HellyInput, Unknown, check_hypotheses, helly_point, verify_certificate
from .sperner import (Verdict, count_rainbow, find_rainbow, random_admissible_coloring,
                      validate_ball, validate_coloring)

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_BUDGET = 0, 1, 2, 3


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _emit(args, text: str, record: dict[str, object]) -> None:
    if args.machine:
        print("\n".join(f"{k}={v}" for k, v in record.items()))
    else:
        print(text)


def cmd_check(args) -> int:
    x = io.load_complex(args.complex)
    report = classify(x, args.effort)
    _emit(args, report.text(), report.record())
    return EXIT_OK


def _load_helly(args) -> HellyInput:
    X = io.load_complex(args.X)
    A = tuple(io.load_subcomplex(p, X) for p in args.A)
    budgets = Budgets(max_area=args.max_area, ball_budget=args.ball_budget, effort=args.effort)
    return HellyInput(X, A, budgets)


def _dump_witness(directory: Path, cert) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "certificate.txt").write_text(io.dump_certificate(cert.simplex))
    if cert.trivial:
        return
    s = cert.assembly
    (directory / "sphere.cx").write_text(io.dump_complex(s.sphere))
    (directory / "phi.map").write_text(io.dump_map(cert.phi))
    (directory / "ball.b3").write_text(io.dump_ball(cert.ball))
    (directory / "dual.txt").write_text(io.dump_dual(cert.dual))
    (directory / "coloring.txt").write_text(io.dump_coloring(cert.coloring))


def cmd_helly(args) -> int:
    inp = _load_helly(args)
    report = check_hypotheses(inp, advisory=not args.no_advisory)
    if not report:
        _emit(args, f"hypothesis failure: {report.failure}\nwitness: {report.witness}",
              {"status": "hypothesis_failure", "reason": report.failure})
        return EXIT_HYPOTHESIS
    result = helly_point(inp)
    if isinstance(result, Unknown):
        _emit(args, str(result), {"status": "Unknown", "stage": result.stage})
        return EXIT_BUDGET
    verdict = verify_certificate(inp.X, inp.A, result.simplex)
    systolic = report.systolic.code if report.systolic else "skipped"
    text = result.text() + f"\nverified: {'yes' if verdict else 'no'}\nX systolic: {systolic}"
    record = {"status": "certificate",
              **{f"v{i}": v for i, v in enumerate(result.simplex)},
              "trivial": "Y" if result.trivial else "N",
              "verified": "Y" if verdict else "N",
              "systolic": systolic}
    _emit(args, text, record)
    if args.witness:
        _dump_witness(Path(args.witness), result)
    return EXIT_OK if verdict else EXIT_HYPOTHESIS


def _param(token: str):
    try:
        return int(token)
    except ValueError:
        return token


def cmd_gen(args) -> int:
    x = generate(args.name, *[_param(p) for p in args.params])
    text = io.dump_complex(x)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_sperner(args) -> int:
    ball = io.load_ball(args.ball)
    dual = io.load_dual(args.dual) if args.dual else None
    if args.coloring:
        coloring = io.load_coloring(args.coloring)
    elif dual is not None:
        coloring = random_admissible_coloring(ball, dual, random.Random(args.seed))
    else:
        raise InputError("a coloring file or a dual structure (--dual) is required")
    ball_ok = validate_ball(ball)
    if dual is not None:
        col_ok = validate_coloring(ball, dual, coloring)
    else:
        col_ok = Verdict(all(c in range(4) for c in coloring.values())
                         and set(coloring) >= ball.vertices, "no dual structure given")
    tet = find_rainbow(ball, coloring)
    count = count_rainbow(ball, coloring)
    text = "\n".join([
        f"ball: {'valid' if ball_ok else 'invalid (' + ball_ok.reason + ')'}",
        f"coloring: {'valid' if col_ok else 'invalid (' + col_ok.reason + ')'}",
        f"rainbow: {' '.join(map(str, tet)) if tet else 'none'}",
        f"rainbow count: {count}",
    ])
    _emit(args, text, {"ball_valid": "Y" if ball_ok else "N",
                       "coloring_valid": "Y" if col_ok else "N",
                       "rainbow": " ".join(map(str, tet)) if tet else "none",
                       "rainbow_count": count})
    return EXIT_OK


def _verify_bundle(X, A, simplex, directory: Path) -> Verdict:
    """Re-check a witness bundle read back from disk, trusting nothing in it."""
    sphere = io.load_complex(directory / "sphere.cx")
    phi = io.load_map(directory / "phi.map")
    ball = io.load_ball(directory / "ball.b3")
    dual = io.load_dual(directory / "dual.txt")
    coloring = io.load_coloring(directory / "coloring.txt")
    verdict = validate_ball(ball, require_no_internal=True)
    if not verdict:
        return verdict
    if ball.boundary != sphere:
        return Verdict.fail("ball boundary differs from the sphere")
    for t in ball.tetrahedra:
        if not X.spans(phi[u] for u in t):
            return Verdict.fail(f"tetrahedron {t} does not map to a simplex of X")
    verdict = dual.check(sphere)
    if not verdict:
        return verdict
    verdict = validate_coloring(ball, dual, coloring)
    if not verdict:
        return verdict
    for u, c in coloring.items():
        if phi[u] not in A[c].vertices:
            return Verdict.fail(f"vertex {u} colored {c} maps outside A{c}")
    tet = find_rainbow(ball, coloring)
    if tet is None:
        return Verdict.fail("no rainbow tetrahedron")
    by_color = {coloring[u]: phi[u] for u in tet}
    if tuple(by_color[c] for c in range(4)) != tuple(simplex):
        return Verdict.fail("first rainbow tetrahedron does not map to the certificate")
    return Verdict(True)


def cmd_verify(args) -> int:
    X = io.load_complex(args.X)
    A = tuple(io.load_subcomplex(p, X) for p in args.A)
    simplex = io.load_certificate(args.certificate)
    verdict = verify_certificate(X, A, simplex)
    if verdict and args.witness:
        directory = Path(args.witness)
        if (directory / "ball.b3").exists():
            verdict = _verify_bundle(X, A, simplex, directory)
    _emit(args, f"certificate {' '.join(map(str, simplex))}: "
                + ("verified" if verdict else f"REJECTED ({verdict.reason})"),
          {"verified": "Y" if verdict else "N"})
    return EXIT_OK if verdict else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="systolic", description=__doc__.split("\n\n")[0])
    parser.add_argument("--machine", action="store_true",
                        help="emit key=value records instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a complex")
    p.add_argument("complex")
    p.add_argument("--effort", type=_positive, default=DEFAULT_EFFORT)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("helly", help="find a simplex meeting four subcomplexes")
    p.add_argument("X")
    p.add_argument("A", nargs=4)
    defaults = Budgets()
    p.add_argument("--max-area", type=_positive, default=defaults.max_area)
    p.add_argument("--ball-budget", type=_positive, default=defaults.ball_budget)
    p.add_argument("--effort", type=_positive, default=defaults.effort)
    p.add_argument("--witness", metavar="DIR", help="write all intermediate witnesses here")
    p.add_argument("--no-advisory", action="store_true",
                   help="skip the advisory systolicity check of X")
    p.set_defaults(func=cmd_helly)

    p = sub.add_parser("gen", help="write a corpus complex")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sperner", help="validate a colored ball and find rainbow tetrahedra")
    p.add_argument("ball")
    p.add_argument("coloring", nargs="?")
    p.add_argument("--dual", help="dual structure file for rule checking")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for a random admissible coloring when none is given")
    p.set_defaults(func=cmd_sperner)

    p = sub.add_parser("verify", help="independently re-verify a certificate")
    p.add_argument("X")
    p.add_argument("A", nargs=4)
    p.add_argument("certificate")
    p.add_argument("--witness", metavar="DIR", help="also re-check the witness bundle")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesisError as exc:
        print(f"hypothesis failure: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
