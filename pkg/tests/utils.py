import random
import yaml

from typing import Dict, List, Set, Tuple

from hyperci.hypergraph import Hypergraph, build

EXAMPLE_PATH = "tests/data/example.txt"
EXAMPLE_EDGES = [
    ["x0", "x1", "x2"],
    ["x2", "x3"],
    ["x2", "x4", "x5", "x6"],
    ["x3", "x6"],
]


def load_config(path: str) -> dict:
    """
    Load configuration from a YAML file.

    Args:
        path (str): Path to the YAML configuration file.

    Returns:
        dict: Configuration dictionary.
    """
    with open(path, "r") as file:
        config = yaml.safe_load(file)
    return config


def example_hypergraph() -> Hypergraph:
    return build(EXAMPLE_EDGES)


def random_hyperedges(
    rng: random.Random, max_nodes: int = 30, max_edges: int = 40, max_size: int = 6
) -> List[List[str]]:
    n = rng.randint(1, max_nodes)
    m = rng.randint(1, max_edges)
    return [
        [f"v{rng.randrange(n)}" for _ in range(rng.randint(1, max_size))]
        for _ in range(m)
    ]


def random_corpus(count: int = 200, seed: int = 7, **kwargs) -> List[Hypergraph]:
    rng = random.Random(seed)
    return [build(random_hyperedges(rng, **kwargs)) for _ in range(count)]


def union_find_components(hypergraph: Hypergraph) -> Set[frozenset]:
    """Brute force: union every pair of nodes that share a hyperedge."""
    parent = list(range(hypergraph.num_nodes))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for members in hypergraph.hyperedges:
        for i in members:
            for j in members:
                parent[find(i)] = find(j)

    groups: Dict[int, Set[int]] = {}
    for v in range(hypergraph.num_nodes):
        groups.setdefault(find(v), set()).add(v)
    return {frozenset(group) for group in groups.values()}


def shared_edge_count(hypergraph: Hypergraph, i: int, j: int) -> int:
    return sum(1 for members in hypergraph.hyperedges if i in members and j in members)


def by_label(hypergraph: Hypergraph, ids) -> Set[str]:
    return {hypergraph.labels[v] for v in ids}


def as_label_edges(hypergraph: Hypergraph) -> List[Tuple[str, ...]]:
    return [tuple(hypergraph.labels[v] for v in members) for members in hypergraph.hyperedges]
