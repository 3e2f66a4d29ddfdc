import logging

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

from hyperci.errors import StrategyError
from hyperci.hypergraph import Hypergraph

from .config import ProtocolConfig
from .core import dismantle
from .types import Strategy, StrategyKind, Trajectory

logger = logging.getLogger(__name__)


def _run_all(
    hypergraph: Hypergraph, strategies: Sequence[Strategy], protocol: ProtocolConfig
) -> List[Trajectory]:
    def run(strategy: Strategy) -> Trajectory:
        return dismantle(
            hypergraph,
            strategy,
            batch_fraction=protocol.batch_fraction,
            stop=protocol.stop,
            norm=protocol.norm,
            per_node=protocol.per_node,
            progress=protocol.progress,
        )

    if protocol.workers == 1 or len(strategies) == 1:
        return [run(strategy) for strategy in strategies]

    # map keeps input order, so results do not depend on scheduling
    with ThreadPoolExecutor(max_workers=protocol.workers) as pool:
        return list(pool.map(run, strategies))


def compare(
    hypergraph: Hypergraph,
    strategies: Sequence[Strategy],
    protocol: Optional[ProtocolConfig] = None,
) -> Dict[str, Trajectory]:
    """Run every strategy under the same protocol, keyed by method token."""
    if not strategies:
        raise StrategyError("At least one strategy is required")

    tokens = [strategy.token for strategy in strategies]
    duplicates = sorted({token for token in tokens if tokens.count(token) > 1})
    if duplicates:
        raise StrategyError(f"Duplicate methods: {', '.join(duplicates)}")

    protocol = protocol or ProtocolConfig()
    trajectories = _run_all(hypergraph, strategies, protocol)
    return dict(zip(tokens, trajectories))


def l_sweep(
    hypergraph: Hypergraph,
    kind: StrategyKind,
    radii: Sequence[int],
    protocol: Optional[ProtocolConfig] = None,
) -> Dict[int, Trajectory]:
    """One dismantling run per ball radius L."""
    kind = StrategyKind(kind)
    if not kind.uses_radius:
        raise StrategyError(f"L sweeps need ci or hyperci, got '{kind.value}'")
    if not radii:
        raise StrategyError("At least one L value is required")
    if any(radius < 1 for radius in radii):
        raise StrategyError("Every L must be at least 1")
    if len(set(radii)) != len(radii):
        raise StrategyError("Duplicate L values")

    protocol = protocol or ProtocolConfig()
    adaptive = protocol.adaptive_ci if kind == StrategyKind.CI else None
    strategies = [
        Strategy(kind=kind, radius=radius, adaptive=adaptive) for radius in radii
    ]
    logger.info("Sweeping %s over L=%s", kind.value, list(radii))

    trajectories = _run_all(hypergraph, strategies, protocol)
    return dict(zip(radii, trajectories))
