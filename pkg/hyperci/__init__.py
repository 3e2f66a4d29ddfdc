__version__ = "0.1.0"

from .errors import (
    HyperCIError,
    HypergraphError,
    ParseError,
    StrategyError,
    TrajectoryFormatError,
)
from .hypergraph import Hypergraph, Component, DatasetStats, Normalization
from .centrality import CentralityScores, CentralityRegistry, rank
from .dismantling import Strategy, StrategyKind, StopCondition, Trajectory, dismantle, anc
