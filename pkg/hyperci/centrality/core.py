import numpy as np

from abc import ABC, abstractmethod
from typing import ClassVar, Dict, List, Optional, Type

from hyperci.errors import HypergraphError, StrategyError
from hyperci.hypergraph import Hypergraph

from .types import CentralityScores


class CentralityMeasure(ABC):
    """A node-scoring rule; subclasses register under a lowercase `name`."""

    name: ClassVar[str]
    uses_radius: ClassVar[bool] = False

    def __init__(self, radius: Optional[int] = None):
        if self.uses_radius:
            radius = 1 if radius is None else radius
            if radius < 1:
                raise StrategyError(f"Radius L must be at least 1, got {radius}")
        elif radius is not None:
            raise StrategyError(f"Measure '{self.name}' does not take a radius")
        self.radius = radius

    @abstractmethod
    def _compute(self, hypergraph: Hypergraph) -> np.ndarray:
        pass

    def __call__(self, hypergraph: Hypergraph) -> CentralityScores:
        if hypergraph.num_nodes == 0:
            raise HypergraphError("Cannot score the nodes of an empty hypergraph")

        values = self._compute(hypergraph)
        return CentralityScores(
            measure=self.name,
            radius=self.radius,
            labels=hypergraph.labels,
            values=tuple(float(value) for value in values),
        )

    def __repr__(self) -> str:
        suffix = f", radius={self.radius}" if self.uses_radius else ""
        return f"{type(self).__name__}(name={self.name!r}{suffix})"


class CentralityRegistry:
    _registry: Dict[str, Type[CentralityMeasure]] = {}

    @classmethod
    def register(cls, measure: Type[CentralityMeasure]) -> Type[CentralityMeasure]:
        name = getattr(measure, "name", None)
        if not name:
            raise ValueError(
                f"Cannot register {measure.__name__}: it must define a 'name' class attribute."
            )
        cls._registry[name] = measure
        return measure

    @classmethod
    def get(cls, name: str) -> Type[CentralityMeasure]:
        measure = cls._registry.get(name)
        if measure is None:
            raise StrategyError(f"Centrality measure '{name}' not registered.")
        return measure

    @classmethod
    def create(cls, name: str, radius: Optional[int] = None) -> CentralityMeasure:
        return cls.get(name)(radius=radius)

    @classmethod
    def names(cls) -> List[str]:
        return list(cls._registry)


def score(
    hypergraph: Hypergraph, name: str, radius: Optional[int] = None
) -> CentralityScores:
    return CentralityRegistry.create(name, radius)(hypergraph)


def rank(scores: CentralityScores) -> List[int]:
    """Node ids by descending score, ties by ascending id."""
    values = np.asarray(scores.values, dtype=np.float64)
    ids = np.arange(len(values))
    return [int(v) for v in np.lexsort((ids, -values))]
