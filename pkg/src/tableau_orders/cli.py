"""Command-line interface: enumerate | check | hasse | hom.

Exit codes: 0 success / all checks pass, 1 a check failed (counterexample
printed), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import CHECK_NAMES, RunConfig, run_check, workers_from_env
from .embeddings import Embedding, hom_dim_embeddings
from .orders import (
    box_moves_lr,
    box_moves_syt,
    dom_leq_lr,
    dom_leq_syt,
    reachability_table,
    relation_table,
    to_dot,
)
from .partitions import parse_partition
from .tableaux import enumerate_T_r, enumerate_lr_rook, enumerate_syt


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tableau-orders",
        description="Partial orders on standard and LR tableaux, with the "
        "exact sequences of nilpotent invariant subspaces behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="list tableaux as JSON lines")
    enum.add_argument("kind", choices=["syt-shape", "syt-weight", "lr-rook"])
    enum.add_argument("--r", type=int, help="tableau weight (syt-weight)")
    enum.add_argument("--beta", help="outer shape, e.g. [5,4,3,2,1]")
    enum.add_argument("--gamma", help="inner shape, e.g. [4,3,2,1]")
    enum.add_argument("--out", help="write to this file instead of stdout")

    chk = sub.add_parser("check", help="run one verification suite")
    chk.add_argument("name", choices=list(CHECK_NAMES))
    chk.add_argument("--r", type=int, default=6, help="largest tableau weight")
    chk.add_argument("--max-height", type=int, default=8)
    chk.add_argument("--field", default="2,3,5", help="comma-separated primes")
    chk.add_argument("--workers", type=int, default=None)
    chk.add_argument("--format", choices=["text", "json"], default="text")
    chk.add_argument("--out", help="write the report to this file")

    has = sub.add_parser("hasse", help="emit the cover relation as DOT text")
    has.add_argument("kind", choices=["syt", "lr-rook"])
    has.add_argument("--r", type=int, help="tableau weight (syt)")
    has.add_argument("--beta")
    has.add_argument("--gamma")
    has.add_argument("--order", choices=["box", "dom"], default="dom")
    has.add_argument("--out")

    hom = sub.add_parser("hom", help="Hom dimension between two embedding files")
    hom.add_argument("source", help="embedding JSON file")
    hom.add_argument("target", help="embedding JSON file")
    return parser


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_enumerate(args) -> int:
    if args.kind == "syt-shape":
        if not args.beta:
            raise ValueError("syt-shape needs --beta as the shape")
        elements = enumerate_syt(parse_partition(args.beta))
    elif args.kind == "syt-weight":
        if not args.r:
            raise ValueError("syt-weight needs --r")
        elements = enumerate_T_r(args.r)
    else:
        if not (args.beta and args.gamma is not None):
            raise ValueError("lr-rook needs --beta and --gamma")
        elements = enumerate_lr_rook(
            parse_partition(args.beta), parse_partition(args.gamma)
        )
    _write("".join(t.to_json() + "\n" for t in elements), args.out)
    return 0


def _cmd_check(args) -> int:
    primes = tuple(int(x) for x in args.field.split(",") if x.strip())
    workers = args.workers if args.workers is not None else workers_from_env()
    cfg = RunConfig(
        field_primes=primes,
        max_weight_r=args.r,
        max_height=args.max_height,
        workers=workers,
        output_format=args.format,
    )
    report = run_check(args.name, cfg)
    if args.format == "json":
        _write(json.dumps(report.to_dict(), sort_keys=True) + "\n", args.out)
    else:
        _write(report.text() + "\n", args.out)
    return 0 if report.passed else 1


def _cmd_hasse(args) -> int:
    if args.kind == "syt":
        if not args.r:
            raise ValueError("hasse syt needs --r")
        elements = enumerate_T_r(args.r)
        moves, dom = box_moves_syt, dom_leq_syt
    else:
        if not (args.beta and args.gamma is not None):
            raise ValueError("hasse lr-rook needs --beta and --gamma")
        elements = enumerate_lr_rook(
            parse_partition(args.beta), parse_partition(args.gamma)
        )
        moves, dom = box_moves_lr, dom_leq_lr
    if args.order == "box":
        table = reachability_table(elements, moves)
    else:
        table = relation_table(elements, dom)
    _write(to_dot(table, name=args.kind.replace("-", "_")), args.out)
    return 0


def _cmd_hom(args) -> int:
    with open(args.source) as fh:
        x = Embedding.from_json(fh.read())
    with open(args.target) as fh:
        z = Embedding.from_json(fh.read())
    sys.stdout.write(f"{hom_dim_embeddings(x, z)}\n")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "enumerate": _cmd_enumerate,
        "check": _cmd_check,
        "hasse": _cmd_hasse,
        "hom": _cmd_hom,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
