from pathlib import Path

import pytest

from experiments.utils import ExperimentConfig, load_config
from hyperci.dismantling import ProtocolConfig, Strategy, StrategyKind, compare, l_sweep
from hyperci.hypergraph import stats
from hyperci.io import load_hypergraph

DATASETS = ExperimentConfig(**load_config("configs/datasets.yaml")).datasets

# nodes, hyperedges, avg hyper-degree, avg hyperedge size (docs/datasets.md)
PUBLISHED_STATS = {
    "cora": (1676, 463, 1.66, 6.00),
    "citeseer": (1019, 626, 2.23, 3.63),
    "mag": (1699, 784, 1.59, 3.38),
    "ndc": (3065, 4533, 13.57, 9.17),
    "pubmed": (3824, 5432, 7.45, 5.25),
}


def dataset(name: str):
    path = Path(DATASETS[name])
    if not path.is_file():
        pytest.skip(f"{path} not present")
    return load_hypergraph(path)


@pytest.mark.parametrize("name", list(PUBLISHED_STATS))
def test_dataset_stats_match_published_table(name):
    summary = stats(dataset(name))
    nodes, hyperedges, hyper_degree, edge_size = PUBLISHED_STATS[name]

    assert summary.node_count == nodes
    assert summary.hyperedge_count == hyperedges
    assert f"{summary.avg_hyper_degree:.2f}" == f"{hyper_degree:.2f}"
    assert f"{summary.avg_hyperedge_size:.2f}" == f"{edge_size:.2f}"


@pytest.mark.parametrize("name", list(PUBLISHED_STATS))
def test_hyper_ci_beats_degree_baselines(name):
    hypergraph = dataset(name)
    protocol = ProtocolConfig()

    baselines = compare(hypergraph, [Strategy.parse("hd"), Strategy.parse("hhd")], protocol)
    sweep = l_sweep(hypergraph, StrategyKind.HYPERCI, [1, 2, 3], protocol)
    best = min(trajectory.anc for trajectory in sweep.values())

    assert best < baselines["hd"].anc
    assert best < baselines["hhd"].anc
