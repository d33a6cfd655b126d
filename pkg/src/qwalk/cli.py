"""Command-line interface: run scenarios, the bundled suite, operator dumps."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .graphs import load_graph_file, standard_family
from .operators import walk_spec, walk_unitary
from .output import render_svg, write_csv, write_matrix_csv
from .scenarios import (
    case_study_scenarios,
    default_name,
    parse_scenario_config,
    run_scenario,
    scenario_from_mapping,
)

__all__ = ["main"]


def _add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--graph",
        help="graph family (path|cycle|star|kab) or file:<path> for a custom graph file",
    )
    parser.add_argument(
        "--size",
        help="family size: one integer, or m,n for the complete bipartite family",
    )
    parser.add_argument("--sender", type=int, help="sender vertex")
    parser.add_argument("--receiver", type=int, help="receiver vertex")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description=(
            "Coined quantum walks on graph edge spaces: state-transfer and "
            "periodicity fidelity, with optional non-Markovian dephasing noise."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one scenario and write its CSV/SVG outputs")
    run.add_argument("--config", help="scenario config file (flat 'key = value' lines)")
    _add_graph_arguments(run)
    run.add_argument("--mode", choices=["transfer", "periodicity"], help="experiment kind")
    run.add_argument(
        "--receiver-mode",
        choices=["incoming", "outgoing"],
        help="receiver-state convention (default incoming)",
    )
    run.add_argument("--noise", choices=["none", "rtn", "oun"], help="noise channel")
    run.add_argument("--rtn-a", type=float, help="telegraph transition amplitude (default 0.1)")
    run.add_argument("--rtn-gamma", type=float, help="telegraph damping rate (default 0.01)")
    run.add_argument("--oun-lambda", type=float, help="OU relaxation parameter (default 1)")
    run.add_argument("--oun-gamma", type=float, help="OU noise bandwidth (default 0.05)")
    run.add_argument("--steps", type=int, help="number of walk steps (default 100)")
    run.add_argument("--out", required=True, help="output directory")
    run.add_argument("--name", help="basename for the output files (default: derived)")

    suite = sub.add_parser(
        "paper-suite", help="run the bundled case-study suite and write all outputs"
    )
    suite.add_argument("--out", required=True, help="output directory")

    dump = sub.add_parser(
        "dump-operators", help="write the coin, shift and step matrices as CSV"
    )
    _add_graph_arguments(dump)
    dump.add_argument("--out", required=True, help="output directory")
    return parser


_FLAG_KEYS = (
    ("graph", "graph"),
    ("size", "size"),
    ("sender", "sender"),
    ("receiver", "receiver"),
    ("mode", "mode"),
    ("receiver_mode", "receiver_mode"),
    ("noise", "noise"),
    ("rtn_a", "rtn_a"),
    ("rtn_gamma", "rtn_gamma"),
    ("oun_lambda", "oun_lambda"),
    ("oun_gamma", "oun_gamma"),
    ("steps", "steps"),
)


def _run_command(args: argparse.Namespace) -> int:
    mapping: dict[str, str] = {}
    if args.config:
        mapping.update(parse_scenario_config(Path(args.config).read_text(encoding="utf-8")))
    for attr, key in _FLAG_KEYS:
        value = getattr(args, attr)
        if value is not None:
            mapping[key] = str(value)
    scenario = scenario_from_mapping(mapping)
    series = run_scenario(scenario)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = args.name or default_name(scenario)
    csv_path = out_dir / f"{name}.csv"
    svg_path = out_dir / f"{name}.svg"
    write_csv(series, csv_path)
    render_svg(series, svg_path, title=name)
    print(csv_path)
    print(svg_path)
    return 0


def _suite_command(args: argparse.Namespace) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, scenario in case_study_scenarios():
        series = run_scenario(scenario)
        write_csv(series, out_dir / f"{name}.csv")
        render_svg(series, out_dir / f"{name}.svg", title=name)
        print(out_dir / f"{name}.csv")
    return 0


def _dump_command(args: argparse.Namespace) -> int:
    if args.graph is None:
        raise ValueError("dump-operators requires --graph")
    if args.sender is None or args.receiver is None:
        raise ValueError("dump-operators requires --sender and --receiver")
    if args.graph.startswith("file:"):
        graph = load_graph_file(args.graph[len("file:"):])
    else:
        if args.size is None:
            raise ValueError(f"graph family {args.graph!r} requires --size")
        size = tuple(int(part) for part in args.size.split(",") if part.strip())
        graph = standard_family(args.graph, *size)
    ops = walk_unitary(walk_spec(graph, args.sender, args.receiver))

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, matrix in (("coin", ops.coin), ("shift", ops.shift), ("unitary", ops.unitary)):
        path = out_dir / f"{name}.csv"
        write_matrix_csv(matrix, path)
        print(path)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "run": _run_command,
        "paper-suite": _suite_command,
        "dump-operators": _dump_command,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
