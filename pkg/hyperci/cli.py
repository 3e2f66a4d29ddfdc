import argparse
import logging
import sys

from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from hyperci import __version__
from hyperci.centrality import CentralityRegistry, rank
from hyperci.config import DEFAULT_METHODS, Command, RunConfig
from hyperci.dismantling import StrategyKind, compare, dismantle, l_sweep
from hyperci.errors import HyperCIError
from hyperci.hypergraph import stats
from hyperci.io import (
    comparison_table,
    load_hypergraph,
    render_anc_svg,
    sweep_table,
    write_stats_csv,
    write_trajectory_csv,
    write_trajectory_json,
)
from hyperci.utils import load_config, partial_update, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def _radius_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def _method_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperci",
        description="Hypergraph dismantling with HyperCI and baseline strategies.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--input", "-i", nargs="+", required=True, metavar="PATH",
        help="hyperedge-list file(s), one hyperedge per line",
    )
    common.add_argument(
        "--config", "-c", type=str, default=None,
        help="YAML file with protocol/logging defaults (CLI flags take precedence)",
    )
    common.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None, help="logging level (default: WARNING)",
    )
    common.add_argument("--log-file", default=None, help="also write logs to this file")

    protocol = argparse.ArgumentParser(add_help=False)
    protocol.add_argument(
        "--batch", type=float, default=None, metavar="F",
        help="fraction of the original nodes removed per batch (default: 0.01)",
    )
    protocol.add_argument(
        "--stop", default=None, metavar="all|frac=F|sigma=T",
        help="stop after removing everything, a fraction F of the nodes, "
        "or once connectivity drops below T (default: all)",
    )
    protocol.add_argument(
        "--norm", choices=["remaining", "original"], default=None,
        help="connectivity denominator: remaining or original node count (default: remaining)",
    )
    protocol.add_argument(
        "--per-node", action="store_const", const=True, default=None,
        help="adaptive strategies rescore after every node instead of every batch (default: off)",
    )
    protocol.add_argument(
        "--adaptive-ci", action="store_const", const=True, default=None,
        help="run the CI baseline adaptively (default: off)",
    )
    protocol.add_argument(
        "--workers", type=int, default=None,
        help="parallel runs for compare/sweep-l (default: 1)",
    )
    protocol.add_argument(
        "--progress", action="store_const", const=True, default=None,
        help="show a progress bar per run (default: off)",
    )

    method_help = "method hd|hda|hhd|hhda|ci|hyperci, with optional :L for ci/hyperci (default L: 1)"
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    stats_parser = commands.add_parser(
        "stats", parents=[common], help="node/hyperedge counts and average sizes"
    )
    stats_parser.add_argument("--csv", default=None, help="also write the statistics as CSV")

    rank_parser = commands.add_parser("rank", parents=[common], help="score and rank nodes")
    rank_parser.add_argument("--method", "-m", required=True, help=method_help)
    rank_parser.add_argument(
        "--top", type=int, default=None, help="print only the first N nodes (default: all)"
    )

    dismantle_parser = commands.add_parser(
        "dismantle", parents=[common, protocol], help="dismantle with one strategy"
    )
    dismantle_parser.add_argument("--method", "-m", required=True, help=method_help)
    dismantle_parser.add_argument("--csv", default=None, help="trajectory CSV file")
    dismantle_parser.add_argument("--json", default=None, help="trajectory JSON file")
    dismantle_parser.add_argument("--svg", default=None, help="ANC curve SVG file")

    compare_parser = commands.add_parser(
        "compare", parents=[common, protocol], help="ANC of several strategies"
    )
    compare_parser.add_argument(
        "--methods", type=_method_list, default=None,
        help=f"comma-separated methods (default: {','.join(DEFAULT_METHODS)})",
    )
    compare_parser.add_argument(
        "--csv", default=None, help="write the ANC table here (default: stdout)"
    )
    compare_parser.add_argument("--svg", default=None, help="ANC curves SVG file")

    sweep_parser = commands.add_parser(
        "sweep-l", parents=[common, protocol], help="ANC of ci/hyperci over several L"
    )
    sweep_parser.add_argument(
        "--method", "-m", default="hyperci", choices=["ci", "hyperci"],
        help="ball-based method to sweep (default: hyperci)",
    )
    sweep_parser.add_argument(
        "--ls", type=_radius_list, default=[1, 2, 3],
        help="comma-separated L values (default: 1,2,3)",
    )
    sweep_parser.add_argument(
        "--csv", default=None, help="write the ANC table here (default: stdout)"
    )
    sweep_parser.add_argument("--svg", default=None, help="ANC curves SVG file")

    return parser


def make_run_config(args: argparse.Namespace) -> RunConfig:
    """Merge the optional YAML config with explicit flags and validate the result."""
    base = load_config(args.config) if args.config else {}

    methods = None
    if getattr(args, "method", None) is not None:
        methods = [args.method]
    elif args.command == Command.COMPARE.value:
        methods = args.methods if args.methods is not None else list(DEFAULT_METHODS)

    updates = {
        "command": args.command,
        "inputs": args.input,
        "methods": methods,
        "radii": getattr(args, "ls", None),
        "top": getattr(args, "top", None),
        "protocol": {
            "batch_fraction": getattr(args, "batch", None),
            "stop": getattr(args, "stop", None),
            "norm": getattr(args, "norm", None),
            "per_node": getattr(args, "per_node", None),
            "adaptive_ci": getattr(args, "adaptive_ci", None),
            "workers": getattr(args, "workers", None),
            "progress": getattr(args, "progress", None),
        },
        "output": {
            "csv_path": getattr(args, "csv", None),
            "json_path": getattr(args, "json", None),
            "svg_path": getattr(args, "svg", None),
        },
        "logging": {
            "log_level": args.log_level,
            "log_file": args.log_file,
        },
    }
    return RunConfig.model_validate(partial_update(base, updates))


def _dataset_name(path: Path) -> str:
    return path.stem


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as file:
        file.write(text)
    logger.info("Wrote %s", path)


def _format_score(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else f"{value:.6f}"


def cmd_stats(config: RunConfig, out: TextIO) -> None:
    rows = []
    for path in config.inputs:
        summary = stats(load_hypergraph(path))
        rows.append((_dataset_name(path), summary))
        if len(config.inputs) == 1:
            print(summary.report(), file=out)
        else:
            print(f"{_dataset_name(path)} {summary.report()}", file=out)

    if config.output.csv_path is not None:
        _write(config.output.csv_path, write_stats_csv(rows))


def cmd_rank(config: RunConfig, out: TextIO) -> None:
    hypergraph = load_hypergraph(config.inputs[0])
    strategy = config.strategies()[0]
    measure = CentralityRegistry.create(strategy.kind.measure, strategy.radius)

    scores = measure(hypergraph)
    order = rank(scores)
    if config.top is not None:
        order = order[: config.top]
    for v in order:
        print(f"{scores.labels[v]} {_format_score(scores.values[v])}", file=out)


def cmd_dismantle(config: RunConfig, out: TextIO) -> None:
    hypergraph = load_hypergraph(config.inputs[0])
    protocol = config.protocol
    trajectory = dismantle(
        hypergraph,
        config.strategies()[0],
        batch_fraction=protocol.batch_fraction,
        stop=protocol.stop,
        norm=protocol.norm,
        per_node=protocol.per_node,
        progress=protocol.progress,
    )

    output = config.output
    if output.csv_path is not None:
        _write(output.csv_path, write_trajectory_csv(trajectory))
    if output.json_path is not None:
        _write(output.json_path, write_trajectory_json(trajectory))
    if output.svg_path is not None:
        curve = (trajectory.strategy.token, trajectory.curve())
        _write(output.svg_path, render_anc_svg([curve], title=_dataset_name(config.inputs[0])))

    print(f"ANC={trajectory.anc:.6f}", file=out)


def _emit_table(config: RunConfig, table, curves, out: TextIO) -> None:
    if config.output.csv_path is not None:
        _write(config.output.csv_path, table.to_csv())
    else:
        out.write(table.to_csv())

    if config.output.svg_path is not None:
        _write(config.output.svg_path, render_anc_svg(curves))


def cmd_compare(config: RunConfig, out: TextIO) -> None:
    strategies = config.strategies()
    table = comparison_table([strategy.token for strategy in strategies])
    curves = []

    for path in config.inputs:
        name = _dataset_name(path)
        results = compare(load_hypergraph(path), strategies, config.protocol)
        table.add(name, {token: trajectory.anc for token, trajectory in results.items()})
        for token, trajectory in results.items():
            label = token if len(config.inputs) == 1 else f"{name}:{token}"
            curves.append((label, trajectory.curve()))

    _emit_table(config, table, curves, out)


def cmd_sweep_l(config: RunConfig, out: TextIO) -> None:
    kind = StrategyKind(config.methods[0])
    table = sweep_table(config.radii)
    curves = []

    for path in config.inputs:
        name = _dataset_name(path)
        results = l_sweep(load_hypergraph(path), kind, config.radii, config.protocol)
        table.add(name, {f"L={radius}": trajectory.anc for radius, trajectory in results.items()})
        for radius, trajectory in results.items():
            label = f"L={radius}" if len(config.inputs) == 1 else f"{name}:L={radius}"
            curves.append((label, trajectory.curve()))

    _emit_table(config, table, curves, out)


COMMANDS: Dict[Command, Callable[[RunConfig, TextIO], None]] = {
    Command.STATS: cmd_stats,
    Command.RANK: cmd_rank,
    Command.DISMANTLE: cmd_dismantle,
    Command.COMPARE: cmd_compare,
    Command.SWEEP_L: cmd_sweep_l,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = make_run_config(args)
    except ValidationError as e:
        messages = "; ".join(error["msg"].removeprefix("Value error, ") for error in e.errors())
        print(f"{parser.prog} {args.command}: error: {messages}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(config.logging)

    try:
        COMMANDS[config.command](config, out)
    except (OSError, HyperCIError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
