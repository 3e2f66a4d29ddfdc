import os
import argparse
import logging

from hyperci.dismantling import StrategyKind, compare, l_sweep
from hyperci.hypergraph import stats
from hyperci.io import comparison_table, load_hypergraph, sweep_table, write_stats_csv
from hyperci.utils import setup_logging
from experiments.utils import ExperimentConfig, load_config, save_config

logger = logging.getLogger("hyperci.experiments")


def run_tables(config: ExperimentConfig, sweep_kind: StrategyKind) -> None:
    """
    Dataset statistics, the ANC comparison across methods and the ANC sweep
    over L, one CSV each, with one row per dataset.
    """
    os.makedirs(config.output_dir, exist_ok=True)
    strategies = config.strategies()

    stats_rows = []
    anc_table = comparison_table([strategy.token for strategy in strategies])
    sweep = sweep_table(config.radii)

    for name, path in config.datasets.items():
        print(f"➡️  {name}: loading {path}")
        hypergraph = load_hypergraph(path)
        summary = stats(hypergraph)
        stats_rows.append((name, summary))
        print(f"   {summary.report()}")

        print(f"➡️  {name}: comparing {len(strategies)} methods")
        results = compare(hypergraph, strategies, config.protocol)
        anc_table.add(name, {token: run.anc for token, run in results.items()})

        print(f"➡️  {name}: sweeping {sweep_kind.value} over L={config.radii}")
        runs = l_sweep(hypergraph, sweep_kind, config.radii, config.protocol)
        sweep.add(name, {f"L={radius}": run.anc for radius, run in runs.items()})

    outputs = {
        "datasets.csv": write_stats_csv(stats_rows),
        "anc.csv": anc_table.to_csv(),
        f"anc_{sweep_kind.value}_l.csv": sweep.to_csv(),
    }
    for filename, text in outputs.items():
        output_path = os.path.join(config.output_dir, filename)
        with open(output_path, "w", encoding="utf-8") as file:
            file.write(text)
        print(f"  - Saved {output_path}")

    # Record the exact configuration next to the tables
    save_config(config.model_dump(mode="json"), os.path.join(config.output_dir, "config.yaml"))
    print("\n✅ Tables complete!")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(
        description="Dataset statistics, ANC per method and ANC per L over a dataset list."
    )
    parser.add_argument(
        "--config", "-c", type=str, default="configs/datasets.yaml",
        help="YAML file listing datasets, methods, L values and the protocol.",
    )
    parser.add_argument(
        "--sweep", choices=["ci", "hyperci"], default="hyperci",
        help="Method swept over L.",
    )
    parser.add_argument(
        "--output-dir", "-o", type=str, default=None,
        help="Overrides output_dir from the config.",
    )
    args = parser.parse_args()

    raw = load_config(args.config)
    if args.output_dir is not None:
        raw["output_dir"] = args.output_dir
    config = ExperimentConfig(**raw)

    setup_logging(config.logging)
    logger.info("Running tables for %d datasets", len(config.datasets))
    run_tables(config, StrategyKind(args.sweep))
