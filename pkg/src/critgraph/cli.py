"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a violation is found, 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .enumeration import read_graph6_stream
from .graph import Graph, GraphError
from .graph6 import Graph6Error, graph6_decode
from .harness import (
    CHECKS,
    EXPLAIN_CHECKS,
    CampaignConfig,
    ConfigError,
    explain,
    parse_filters,
    partition_from_spec,
    run_campaign,
    summary_csv,
    verify_conjecture,
)
from .partition import HypothesisFailure, InjectivityViolation, build_association, lemma_bound_check
from .structure import independent_cuts

log = logging.getLogger("critgraph")


class UsageError(Exception):
    pass


def parse_n(text: str) -> tuple[int, ...]:
    """``"7"`` or ``"2-8"`` into a tuple of orders."""
    try:
        if "-" in text:
            lo, hi = (int(s) for s in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return tuple(range(lo, hi + 1))


def _graphs_from_arg(arg: str) -> list[Graph]:
    if arg == "-":
        return list(read_graph6_stream("-"))
    return [graph6_decode(arg)]


def _single_graph(arg: str) -> Graph:
    gs = _graphs_from_arg(arg)
    if len(gs) != 1:
        raise UsageError(f"expected exactly one graph, got {len(gs)}")
    return gs[0]


def _add_campaign_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--n", type=parse_n, help="order or range, e.g. 7 or 2-8")
    src.add_argument("--input", help="graph6 file, or - for stdin")
    p.add_argument("--filter", default=None, help="e.g. class=3gt,kappa=2,delta=3,indcut=true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", default=None, help="write records here instead of stdout")
    p.add_argument("--format", dest="fmt", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--summary-csv", default=None, help="also write the summary as CSV")
    dd = p.add_mutually_exclusive_group()
    dd.add_argument("--dedupe", dest="dedupe", action="store_true", default=True,
                    help="drop isomorphic duplicates from file input (default)")
    dd.add_argument("--assume-isofree", dest="dedupe", action="store_false",
                    help="trust file input to be isomorph-free")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="critgraph", description="Diameter-2 edge-critical graph verification harness")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="verdict for graph6 strings")
    p.add_argument("graph", help="graph6 string, or - to read lines from stdin")

    p = sub.add_parser("check", help="run checks over generated graphs or a file")
    p.add_argument("--checks", default="conjecture", help=f"comma list from: {','.join(CHECKS)} (or all)")
    _add_campaign_flags(p)

    p = sub.add_parser("scan", help="list verdicts matching a filter")
    p.add_argument("--checks", default="conjecture")
    _add_campaign_flags(p)

    p = sub.add_parser("cuts", help="independent vertex cuts")
    p.add_argument("graph")
    p.add_argument("--min-size", type=int, default=1)

    p = sub.add_parser("assoc", help="missing-edge to crossing-edge association")
    p.add_argument("graph")
    p.add_argument("--partition", required=True, help="A side, e.g. 0,1,2")

    p = sub.add_parser("explain", help="step-by-step evidence for one check")
    p.add_argument("graph")
    p.add_argument("--check", required=True, choices=EXPLAIN_CHECKS)
    return ap


def _campaign(args: argparse.Namespace) -> int:
    checks = CHECKS if args.checks == "all" else tuple(c.strip() for c in args.checks.split(",") if c.strip())
    cfg = CampaignConfig(
        checks=checks,
        n_values=args.n or (),
        input_path=args.input,
        filters=parse_filters(args.filter),
        jobs=args.jobs,
        output=args.output,
        fmt=args.fmt,
        dedupe=args.dedupe,
    )
    if not cfg.n_values and cfg.input_path is None:
        raise ConfigError("give --n or --input")
    sink = None if args.output else sys.stdout
    summary = run_campaign(cfg, sink)
    if args.summary_csv:
        with open(args.summary_csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(summary_csv(summary))
    json.dump(summary.to_dict(), sys.stderr, ensure_ascii=False, indent=2)
    sys.stderr.write("\n")
    return summary.exit_code


def _run(args: argparse.Namespace) -> int:
    if args.command in ("check", "scan"):
        return _campaign(args)
    if args.command == "classify":
        for g in _graphs_from_arg(args.graph):
            print(verify_conjecture(g).to_json())
        return 0
    g = _single_graph(args.graph)
    if args.command == "cuts":
        for info in independent_cuts(g, args.min_size):
            print(json.dumps(info.to_dict()))
        return 0
    if args.command == "assoc":
        p = partition_from_spec(g, args.partition)
        try:
            amap = build_association(g, p)
        except HypothesisFailure as exc:
            print(json.dumps({"partition": str(p), "hypothesis_failure": list(exc.edge.ends())}))
            return 0
        except InjectivityViolation as exc:
            print(json.dumps({"partition": str(p), "injectivity_violation": str(exc)}))
            return 1
        out = {"partition": str(p), **amap.to_dict(), "bound_ok": lemma_bound_check(g, p)}
        print(json.dumps(out))
        return 0 if out["bound_ok"] else 1
    print(explain(g, args.check))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return _run(args)
    except (ConfigError, UsageError, GraphError, Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
