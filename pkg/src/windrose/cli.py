"""Command line: ``windrose test|draw|generate|verify``.

Exit codes: 0 yes, 1 no, 2 invalid input, 3 unsupported style.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .draw import straight_line_drawing, windrose_pipeline
from .errors import GraphError, NotWindrosePlanar, StyleUnavailable, WindroseError
from .generators import BadParams, generate
from .io import (
    DocumentError,
    document_to_drawing,
    drawing_to_document,
    drawing_to_svg,
    dumps,
    instance_to_document,
    parse_instance,
)
from .verify import verify_drawing

EXIT_YES, EXIT_NO, EXIT_INVALID, EXIT_STYLE = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(path: str):
    try:
        return parse_instance(_read(path))
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None


def _invalid(exc: Exception) -> int:
    print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
    return EXIT_INVALID


def cmd_test(args) -> int:
    g, q = _load(args.instance)
    res = windrose_pipeline(g, q)
    verdict = {"windrose_planar": res.planar}
    if not res.planar:
        verdict["certificate"] = res.certificate
    print(json.dumps(verdict, default=str))
    return EXIT_YES if res.planar else EXIT_NO


def cmd_draw(args) -> int:
    g, q = _load(args.instance)
    try:
        if args.style == "straight":
            d = straight_line_drawing(g, q)
        else:
            res = windrose_pipeline(g, q)
            if not res.planar:
                raise NotWindrosePlanar(res.certificate)
            d = res.drawing
    except NotWindrosePlanar as exc:
        print(json.dumps({"windrose_planar": False, "certificate": exc.certificate}, default=str), file=sys.stderr)
        return EXIT_NO
    except StyleUnavailable as exc:
        print(json.dumps({"error": "StyleUnavailable", "message": str(exc)}), file=sys.stderr)
        return EXIT_STYLE
    report = verify_drawing(g, q, d)
    if not report.ok:
        raise WindroseError(f"drawing failed self-verification: {report.violations[:3]}")
    text = drawing_to_svg(g, q, d) if args.format == "svg" else dumps(drawing_to_document(g, d))
    _write(text, args.out)
    return EXIT_YES


def cmd_generate(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get("WINDROSE_SEED")
        try:
            seed = int(env) if env is not None else 0
        except ValueError:
            raise BadParams(f"WINDROSE_SEED must be an integer, got {env!r}") from None
    inst = generate(args.kind, args.param, seed)
    _write(dumps(instance_to_document(inst.graph, inst.constraints)), args.out)
    return EXIT_YES


def cmd_verify(args) -> int:
    g, q = _load(args.instance)
    try:
        d = document_to_drawing(json.loads(_read(args.drawing)))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{args.drawing}: line {exc.lineno}: {exc.msg}") from None
    report = verify_drawing(g, q, d)
    print(json.dumps({
        "ok": report.ok,
        "planarity_ok": report.planarity_ok,
        "monotonicity_ok": report.monotonicity_ok,
        "quadrants_ok": report.quadrants_ok,
        "embedding_ok": report.embedding_ok,
        "violations": [list(map(str, v)) for v in report.violations],
    }))
    return EXIT_YES if report.ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="windrose", description="Windrose planarity testing and drawing.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="decide windrose planarity and print a JSON verdict")
    p.add_argument("instance", help="instance JSON file, or - for stdin")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("draw", help="draw a windrose-planar instance")
    p.add_argument("instance")
    p.add_argument("--format", choices=["json", "svg"], default="json")
    p.add_argument("--style", choices=["one-bend", "straight"], default="one-bend")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("generate", help="emit a fixture or random instance")
    p.add_argument("kind", help="delaunay, apollonian, nested-triangles, triangle, path-ambiguous, cyclic-triangle, k4-apex")
    p.add_argument("param", nargs="?", type=int, help="size parameter (n or k)")
    p.add_argument("--seed", type=int, default=None, help="random seed (default: $WINDROSE_SEED or 0)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a drawing against an instance")
    p.add_argument("instance")
    p.add_argument("drawing")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, GraphError, BadParams) as exc:
        return _invalid(exc)


if __name__ == "__main__":
    sys.exit(main())
