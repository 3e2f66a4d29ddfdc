import logging
import math

from typing import List, Optional, Set

from tqdm import tqdm

from hyperci import __version__
from hyperci.centrality import CentralityRegistry, rank
from hyperci.errors import HypergraphError
from hyperci.hypergraph import Hypergraph, Normalization, connectivity, remove_nodes

from .types import Batch, StopCondition, Strategy, Trajectory

logger = logging.getLogger(__name__)


def batch_size_for(node_count: int, batch_fraction: float) -> int:
    """Nodes removed per batch, fixed from the original node count."""
    return max(1, math.floor(batch_fraction * node_count))


def _select_adaptive(
    current: Hypergraph, strategy: Strategy, count: int, per_node: bool
) -> List[str]:
    measure = CentralityRegistry.create(strategy.kind.measure, strategy.radius)

    if not per_node:
        order = rank(measure(current))
        return [current.labels[v] for v in order[:count]]

    chosen = []
    for _ in range(count):
        top = rank(measure(current))[0]
        chosen.append(current.labels[top])
        current = remove_nodes(current, {top})
    return chosen


def dismantle(
    hypergraph: Hypergraph,
    strategy: Strategy,
    batch_fraction: float = 0.01,
    stop: Optional[StopCondition] = None,
    norm: Normalization = Normalization.REMAINING,
    per_node: bool = False,
    progress: bool = False,
) -> Trajectory:
    """
    Remove nodes in batches chosen by `strategy` and record connectivity after
    every batch.

    Static strategies rank the nodes once on the input hypergraph; adaptive ones
    rescore the current hypergraph before each batch (or before each node when
    `per_node` is set).
    """
    if hypergraph.num_nodes == 0:
        raise HypergraphError("Cannot dismantle an empty hypergraph")
    if not 0.0 < batch_fraction <= 1.0:
        raise ValueError(f"Batch fraction must be in (0, 1], got {batch_fraction}")

    stop = stop or StopCondition()
    norm = Normalization(norm)
    n0 = hypergraph.num_nodes
    batch_size = batch_size_for(n0, batch_fraction)
    initial_sigma = connectivity(hypergraph)

    static_order: List[str] = []
    if not strategy.adaptive:
        measure = CentralityRegistry.create(strategy.kind.measure, strategy.radius)
        static_order = [hypergraph.labels[v] for v in rank(measure(hypergraph))]

    logger.info(
        "Dismantling %d nodes with %s (batch size %d, stop %s, norm %s)",
        n0, strategy.token, batch_size, stop, norm.value,
    )

    current = hypergraph
    removed: Set[str] = set()
    batches: List[Batch] = []

    with tqdm(total=n0, desc=strategy.token, disable=not progress) as bar:
        while current.num_nodes > 0:
            count = min(batch_size, current.num_nodes)

            if strategy.adaptive:
                victims = _select_adaptive(current, strategy, count, per_node)
            else:
                victims = static_order[len(removed) : len(removed) + count]

            current = remove_nodes(current, {current.index_of(label) for label in victims})
            removed.update(victims)

            sigma_remaining = connectivity(current, Normalization.REMAINING)
            sigma_original = connectivity(current, Normalization.ORIGINAL, n0)
            sigma = sigma_remaining if norm == Normalization.REMAINING else sigma_original

            batch = Batch(
                index=len(batches) + 1,
                removed=tuple(victims),
                frac_removed=len(removed) / n0,
                sigma_remaining=sigma_remaining,
                sigma_original=sigma_original,
                ratio=sigma / initial_sigma,
            )
            batches.append(batch)
            bar.update(count)
            logger.debug(
                "Batch %d: removed %d, sigma %.6f", batch.index, count, sigma
            )

            if stop.reached(batch.frac_removed, sigma):
                break

    trajectory = Trajectory(
        tool_version=__version__,
        strategy=strategy,
        batch_fraction=batch_fraction,
        batch_size=batch_size,
        stop=stop,
        norm=norm,
        per_node=per_node,
        node_count=n0,
        initial_sigma=initial_sigma,
        batches=batches,
    )
    trajectory.anc = anc(trajectory)

    logger.info("%s: %d batches, ANC=%.6f", strategy.token, len(batches), trajectory.anc)
    return trajectory


def anc(trajectory: Trajectory) -> float:
    """
    Accumulated normalized connectivity: mean over removed nodes of the
    connectivity ratio after their removal. Every node of a batch is credited
    with the ratio observed after the whole batch.
    """
    if not trajectory.batches:
        raise ValueError("ANC of an empty trajectory is undefined")
    if trajectory.initial_sigma <= 0:
        raise ValueError("Initial connectivity must be positive")

    removed = trajectory.removed_count
    total = sum(len(batch.removed) * batch.ratio for batch in trajectory.batches)
    return total / removed
