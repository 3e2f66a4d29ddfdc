from enum import Enum
from typing import FrozenSet

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Normalization(str, Enum):
    """Denominator used for the connectivity ratio."""

    REMAINING = "remaining"
    ORIGINAL = "original"


class Component(BaseModel):
    model_config = ConfigDict(frozen=True)

    node_ids: FrozenSet[int] = Field(..., description="Nodes of the component")
    hyperedge_ids: FrozenSet[int] = Field(
        ..., description="Hyperedges whose members all lie in the component"
    )

    @property
    def node_count(self) -> int:
        return len(self.node_ids)

    @property
    def hyperedge_count(self) -> int:
        return len(self.hyperedge_ids)

    @property
    def min_node(self) -> int:
        return min(self.node_ids)


class DatasetStats(BaseModel):
    """Size summary of a hypergraph, in the shape of a dataset statistics table."""

    model_config = ConfigDict(frozen=True)

    node_count: int = Field(..., gt=0)
    hyperedge_count: int = Field(..., gt=0)
    incidence_count: int = Field(
        ..., ge=0, description="Sum of hyper-degrees, equal to the sum of hyperedge sizes"
    )

    @model_validator(mode="after")
    def validate_incidences(self) -> "DatasetStats":
        if self.incidence_count < self.hyperedge_count:
            raise ValueError("every hyperedge needs at least one member")
        return self

    @property
    def avg_hyper_degree(self) -> float:
        return self.incidence_count / self.node_count

    @property
    def avg_hyperedge_size(self) -> float:
        return self.incidence_count / self.hyperedge_count

    def report(self) -> str:
        return (
            f"nodes={self.node_count} hyperedges={self.hyperedge_count} "
            f"avg_hyper_degree={self.avg_hyper_degree:.2f} "
            f"avg_hyperedge_size={self.avg_hyperedge_size:.2f}"
        )
