import numpy as np

from hyperci.hypergraph import Hypergraph

from .core import CentralityMeasure, CentralityRegistry
from .types import CentralityScores
from .utils import frontier_sums


def _projected_degrees(hypergraph: Hypergraph) -> np.ndarray:
    """Distinct-neighbour degree in the projection."""
    return np.diff(hypergraph.adjacency.indptr).astype(np.float64)


@CentralityRegistry.register
class HyperDegree(CentralityMeasure):
    """Number of incident hyperedges."""

    name = "hhd"

    def _compute(self, hypergraph: Hypergraph) -> np.ndarray:
        return hypergraph.degrees.astype(np.float64)


@CentralityRegistry.register
class ProjectedDegree(CentralityMeasure):
    """Unweighted degree of the node in the clique-expansion projection."""

    name = "hd"

    def _compute(self, hypergraph: Hypergraph) -> np.ndarray:
        return _projected_degrees(hypergraph)


@CentralityRegistry.register
class CollectiveInfluence(CentralityMeasure):
    """
    Classic collective influence on the projection:
    ``(k(v) - 1) * sum((k(u) - 1) for u at distance L)``.
    """

    name = "ci"
    uses_radius = True

    def _compute(self, hypergraph: Hypergraph) -> np.ndarray:
        excess = np.maximum(_projected_degrees(hypergraph) - 1, 0)
        return excess * frontier_sums(hypergraph.binary_adjacency, excess, self.radius)


@CentralityRegistry.register
class HyperCollectiveInfluence(CentralityMeasure):
    """
    Collective influence with hyper-degrees:
    ``(HHD(v) - 1) * sum(HHD(u) for u at distance L)``.
    """

    name = "hyperci"
    uses_radius = True

    def _compute(self, hypergraph: Hypergraph) -> np.ndarray:
        degrees = hypergraph.degrees.astype(np.float64)
        excess = np.maximum(degrees - 1, 0)
        return excess * frontier_sums(hypergraph.binary_adjacency, degrees, self.radius)


def score_hhd(hypergraph: Hypergraph) -> CentralityScores:
    return HyperDegree()(hypergraph)


def score_hd(hypergraph: Hypergraph) -> CentralityScores:
    return ProjectedDegree()(hypergraph)


def score_ci(hypergraph: Hypergraph, radius: int = 1) -> CentralityScores:
    return CollectiveInfluence(radius)(hypergraph)


def score_hyper_ci(hypergraph: Hypergraph, radius: int = 1) -> CentralityScores:
    return HyperCollectiveInfluence(radius)(hypergraph)
