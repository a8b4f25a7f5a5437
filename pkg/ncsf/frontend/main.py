"""
Command-line interface for the ncsf toolkit.

Usage::

    python -m ncsf.frontend.main <verb> [options]

Verbs:

* ``convert``  - re-express a basis element or expression in another basis.
* ``product``  - multiply two NSym basis elements.
* ``pieri``    - right Pieri expansions for S, Qp and the dual action on Sd.
* ``tableaux`` - list immaculate tableaux of a shape.
* ``matrix``   - print or write a transition matrix, or all golden matrices.
* ``skew``     - skew dual immaculate functions and their poset paths.
* ``chi``      - project NSym to Sym, or straighten a Schur index.
* ``check``    - run a conjecture or identity check.
* ``serve``    - start the HTTP API.

Every verb accepts ``--json``.  The exit status is 0 on success, 1 when a
check finds counterexamples and 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Callable, List, Optional

from ncsf.backend import config, operations
from ncsf.backend.checks import CHECKS, run_check
from ncsf.backend.compositions import parse_composition
from ncsf.backend.errors import DomainError
from ncsf.backend.matrices import (
    build_matrix,
    emit_golden_matrices,
    format_matrix,
    matrix_payload,
    write_matrix,
)
from ncsf.backend.skew_poset import (
    enumerate_paths,
    format_path,
    path_descent_composition,
    skew_dual_immaculate,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

BASIS_TAGS = ["H", "R", "S", "Qp", "M", "F", "Sd", "P", "h", "s"]


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _emit_expression(args: argparse.Namespace, expr: Any) -> int:
    expr = operations.specialize(expr, args.q_at)
    _emit(args, expr.to_dict(), expr.to_text())
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    text = args.expr if args.expr is not None else args.index
    if text is None:
        raise DomainError("convert needs an index or --expr")
    value = operations.read_expression(text, args.source)
    return _emit_expression(args, operations.convert(value, args.target))


def cmd_product(args: argparse.Namespace) -> int:
    return _emit_expression(args, operations.multiply(args.basis, args.alpha, args.beta, args.target))


def cmd_pieri(args: argparse.Namespace) -> int:
    return _emit_expression(args, operations.pieri(args.basis, args.alpha, args.s, args.elementary))


def cmd_tableaux(args: argparse.Namespace) -> int:
    found = operations.tableaux(args.alpha, args.beta)
    key = "n" if args.beta is not None else "descents"
    lines = [f"{len(found)} tableaux"]
    for item in found:
        body = " / ".join(" ".join(map(str, row)) for row in item["rows"])
        lines.append(f"{body}    {key}={item[key]}")
    _emit(args, {"count": len(found), "tableaux": found}, "\n".join(lines))
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    if args.golden:
        out_dir = args.out or config.GOLDEN_DIR
        written = emit_golden_matrices(out_dir, args.n or 4)
        _emit(args, {"written": written}, "\n".join(written))
        return EXIT_OK
    if args.n is None or args.source is None or args.target is None:
        raise DomainError("matrix needs --n, --from and --to (or --golden)")
    source, target = operations.as_basis(args.source), operations.as_basis(args.target)
    frame = build_matrix(args.n, source, target)
    if args.out:
        write_matrix(args.out, frame, source, target, args.n)
    _emit(args, matrix_payload(frame, source, target, args.n),
          format_matrix(frame, source, target, args.n).rstrip("\n"))
    return EXIT_OK


def cmd_skew(args: argparse.Namespace) -> int:
    alpha, beta = parse_composition(args.alpha), parse_composition(args.beta)
    expr = operations.specialize(skew_dual_immaculate(alpha, beta, operations.as_basis(args.target)), args.q_at)
    if not args.paths:
        _emit(args, expr.to_dict(), expr.to_text())
        return EXIT_OK
    paths = enumerate_paths(alpha, beta)
    lines = [f"{format_path(p)}    {path_descent_composition(p).bracketed()}" for p in paths]
    lines.append(expr.to_text())
    payload = {
        "paths": [{"steps": list(p.steps), "descents": list(path_descent_composition(p))} for p in paths],
        "result": expr.to_dict(),
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_chi(args: argparse.Namespace) -> int:
    if args.straighten:
        return _emit_expression(args, operations.straighten_text(args.index))
    value = operations.read_expression(args.index, args.source)
    if value.basis.algebra != "NSym":
        raise DomainError(f"chi projects NSym expressions, got {value.basis.value}")
    return _emit_expression(args, operations.convert(value, args.target))


def cmd_check(args: argparse.Namespace) -> int:
    report = run_check(args.name, args.max_n, args.workers)
    _emit(args, report.to_dict(), report.to_text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_serve(args: argparse.Namespace) -> int:
    from ncsf.backend import api_server

    api_server.run(args.host, args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--q-at", type=int, default=None, help="specialise q to this integer")

    parser = argparse.ArgumentParser(prog="ncsf", description="Immaculate and Hall-Littlewood NSym/QSym calculator")
    parser.add_argument("--log-level", default=None, help="logging level (default NCSF_LOG_LEVEL)")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("convert", parents=[common], help="change basis")
    p.add_argument("index", nargs="?", help="composition such as 3,1,2,3")
    p.add_argument("--expr", help="expression text such as 'S[2,2] - q*S[1,3]'")
    p.add_argument("--from", dest="source", choices=BASIS_TAGS)
    p.add_argument("--to", dest="target", choices=BASIS_TAGS, required=True)
    p.set_defaults(handler=cmd_convert)

    p = verbs.add_parser("product", parents=[common], help="multiply two NSym basis elements")
    p.add_argument("--basis", choices=BASIS_TAGS, default="S")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--to", dest="target", choices=BASIS_TAGS)
    p.set_defaults(handler=cmd_product)

    p = verbs.add_parser("pieri", parents=[common], help="right Pieri expansion")
    p.add_argument("--basis", choices=["S", "Qp", "Sd"], default="S")
    p.add_argument("--alpha", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--elementary", action="store_true", help="multiply by S[1^s] instead of H[s]")
    p.set_defaults(handler=cmd_pieri)

    p = verbs.add_parser("tableaux", parents=[common], help="list immaculate tableaux")
    p.add_argument("--alpha", required=True, help="shape")
    p.add_argument("--beta", help="content; standard tableaux when omitted")
    p.set_defaults(handler=cmd_tableaux)

    p = verbs.add_parser("matrix", parents=[common], help="transition matrices")
    p.add_argument("--n", type=int)
    p.add_argument("--from", dest="source", choices=BASIS_TAGS)
    p.add_argument("--to", dest="target", choices=BASIS_TAGS)
    p.add_argument("--out", help="file to write (directory with --golden)")
    p.add_argument("--golden", action="store_true", help="write every golden matrix")
    p.set_defaults(handler=cmd_matrix)

    p = verbs.add_parser("skew", parents=[common], help="skew dual immaculate functions")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--to", dest="target", choices=["M", "F", "Sd"], default="F")
    p.add_argument("--paths", action="store_true", help="also list the poset paths")
    p.set_defaults(handler=cmd_skew)

    p = verbs.add_parser("chi", parents=[common], help="project NSym to Sym")
    p.add_argument("index")
    p.add_argument("--from", dest="source", choices=["H", "R", "S", "Qp"], default="S")
    p.add_argument("--to", dest="target", choices=["s", "h"], default="s")
    p.add_argument("--straighten", action="store_true", help="straighten s[index] for an integer tuple")
    p.set_defaults(handler=cmd_chi)

    p = verbs.add_parser("check", parents=[common], help="run a conjecture or identity check")
    p.add_argument("name", choices=sorted(CHECKS))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(handler=cmd_check)

    p = verbs.add_parser("serve", help="start the HTTP API")
    p.add_argument("--host", default=None)
    p.add_argument("--port", type=int, default=None)
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv`` (default ``sys.argv[1:]``), run the verb and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        config.configure_logging(args.log_level)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except DomainError as e:
        logger.debug(f"{args.verb} rejected input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
