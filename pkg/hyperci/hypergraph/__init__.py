from .core import (
    Hypergraph,
    ball_boundary,
    bfs_layers,
    build,
    components,
    connectivity,
    gcc,
    hhd,
    neighbors,
    project_adjacency,
    remove_nodes,
    stats,
)
from .types import Component, DatasetStats, Normalization
