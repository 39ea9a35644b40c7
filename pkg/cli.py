"""
Command-line front end

Subcommands: validate, triangles, order, decompose, verify, gen, bench.
Exit codes: 0 success, 1 I/O or usage error, 2 invalid triangulation,
3 verification mismatch. Logs go to standard error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from config.settings import settings
from schemas.generator import GenSpec
from services.embedding import RotationGraph, serialize_rotation_graph
from services.errors import DecompositionError, GeneratorError, OracleLimitError, RotationFormatError, TriangulationError
from services.export import tree_to_dot, tree_to_json
from services.generators import generate
from services.pipeline import decomposition_service

logger = logging.getLogger("cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3


def _read_input(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load(args: argparse.Namespace) -> RotationGraph:
    return decomposition_service.load(_read_input(args.input))


def _spec_from_args(args: argparse.Namespace) -> GenSpec:
    seed = settings.DEFAULT_SEED if args.seed is None else args.seed
    if args.kind == "canonical":
        return GenSpec(kind="canonical", name=args.name)
    if args.kind == "nested-chain":
        return GenSpec(kind="nested-chain", k=args.k if args.k is not None else args.n)
    if args.kind == "flipped":
        return GenSpec(kind="flipped", n=args.n, seed=seed, flips=args.flips)
    return GenSpec(kind="apollonian", n=args.n, seed=seed)


def cmd_validate(args: argparse.Namespace) -> int:
    graph = _load(args)
    diagnostics = decomposition_service.validate(graph)
    for line in diagnostics.messages():
        print(line)
    if diagnostics.ok:
        print(f"ok: n={graph.vertex_count} m={graph.edge_count}")
        return EXIT_OK
    return EXIT_INVALID


def cmd_triangles(args: argparse.Namespace) -> int:
    graph = _load(args)
    triangles = decomposition_service.separating(graph)
    corners = sorted(entry.corners for entry in decomposition_service.triangle_entries(graph, triangles))
    _write_output("".join(f"{u} {v} {w}\n" for u, v, w in corners), args.out)
    return EXIT_OK


def cmd_order(args: argparse.Namespace) -> int:
    graph = _load(args)
    ordered = decomposition_service.order(graph)
    entries = decomposition_service.ordered_entries(graph, ordered)
    _write_output("".join(f"{entry.line()}\n" for entry in entries), args.out)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    graph = _load(args)
    result = decomposition_service.run(graph)
    text = tree_to_dot(result.tree) if args.format == "dot" else tree_to_json(result.tree) + "\n"
    _write_output(text, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.gen:
        base = _spec_from_args(args)
        if args.count > 1:
            if base.kind not in ("apollonian", "flipped"):
                raise GeneratorError("--count needs --kind apollonian or flipped")
            specs = [base.model_copy(update={"seed": base.seed + i}) for i in range(args.count)]
        else:
            specs = [base]
        reports = decomposition_service.verify_many(specs, args.workers)
    else:
        graph = _load(args)
        reports = [decomposition_service.verify(graph, label=args.input or "stdin")]

    for report in reports:
        status = "agree" if report.agreement else "MISMATCH"
        print(
            f"{report.label}: {status}  n={report.n} m={report.m} |T|={report.separating_triangles} "
            f"components={report.components} transfers={report.transfers}"
        )
        for line in report.differences:
            print(f"  {line}")
    failed = sum(1 for r in reports if not r.agreement)
    print(f"{len(reports) - failed}/{len(reports)} instances agree")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def cmd_gen(args: argparse.Namespace) -> int:
    graph = generate(_spec_from_args(args))
    _write_output(serialize_rotation_graph(graph), args.out)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = args.sizes or settings.BENCH_SIZES
    if sorted(sizes) != list(sizes):
        raise GeneratorError("--sizes must be ascending")
    result = decomposition_service.bench(args.kind, sizes, seed=args.seed)
    table = decomposition_service.bench_table(result)
    print(table.to_string(index=False))
    if result.slope is not None:
        print(f"log-log slope: {result.slope:.3f}")
    if args.csv:
        table.to_csv(args.csv, index=False)
        logger.info(f"Wrote {len(table)} rows to {args.csv}")
    return EXIT_OK


def _add_io(parser: argparse.ArgumentParser, out: bool = True) -> None:
    parser.add_argument("input", nargs="?", default=None, help="rotation-format file (default: standard input)")
    if out:
        parser.add_argument("--out", default=None, help="output path (default: standard output)")


def _add_generator(parser: argparse.ArgumentParser, kind_default: str = "apollonian") -> None:
    parser.add_argument("--kind", choices=["canonical", "apollonian", "nested-chain", "flipped"], default=kind_default)
    parser.add_argument("--n", type=int, default=None, help="vertex count (apollonian, flipped) or depth (nested-chain)")
    parser.add_argument("--k", type=int, default=None, help="depth (nested-chain)")
    parser.add_argument("--seed", type=int, default=None, help="seed (default: QB_SEED)")
    parser.add_argument("--flips", type=int, default=None, help="flip attempts (flipped, default 2n)")
    parser.add_argument("--name", default=None, help="fixture name (canonical)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadblock", description=settings.DESCRIPTION)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that the input is an embedded triangulation")
    _add_io(p, out=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("triangles", help="list separating triangles, one 'u v w' per line")
    _add_io(p)
    p.set_defaults(func=cmd_triangles)

    p = sub.add_parser("order", help="separating triangles innermost-first with reference edges")
    _add_io(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("decompose", help="compute the 4-block tree")
    _add_io(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="compare the pipeline with the brute-force oracle")
    _add_io(p, out=False)
    p.add_argument("--gen", action="store_true", help="verify generated instances instead of an input file")
    _add_generator(p)
    p.add_argument("--count", type=int, default=1, help="number of random instances (seeds seed, seed+1, ...)")
    p.add_argument("--workers", type=int, default=None, help="worker threads (default: QB_VERIFY_WORKERS)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance in rotation format")
    _add_generator(p)
    p.add_argument("--out", default=None, help="output path (default: standard output)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the pipeline over growing instances")
    p.add_argument("--kind", choices=["apollonian", "nested-chain", "flipped"], default="nested-chain")
    p.add_argument("--sizes", type=int, nargs="+", default=None, help="ascending sizes (default: QB_BENCH_SIZES)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--csv", default=None, help="also write the table as CSV")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else getattr(logging, settings.LOG_LEVEL, logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        return args.func(args)
    except TriangulationError as e:
        for line in e.diagnostics.messages():
            print(line)
        logger.error(str(e))
        return EXIT_INVALID
    except (OSError, RotationFormatError, GeneratorError, OracleLimitError, ValidationError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    except DecompositionError as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
