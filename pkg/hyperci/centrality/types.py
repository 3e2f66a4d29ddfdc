from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CentralityScores(BaseModel):
    """Scores of every live node for one measure on one hypergraph state."""

    model_config = ConfigDict(frozen=True)

    measure: str = Field(..., description="Registered measure name")
    radius: Optional[int] = Field(None, ge=1, description="Ball radius L, if any")
    labels: Tuple[str, ...] = Field(..., description="Node labels, indexed by node id")
    values: Tuple[float, ...] = Field(..., description="Score per node id")

    @model_validator(mode="after")
    def validate_scores(self) -> "CentralityScores":
        if len(self.labels) != len(self.values):
            raise ValueError("labels and values must have the same length")
        if any(value < 0 for value in self.values):
            raise ValueError("scores must be non-negative")
        return self

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, label: str) -> float:
        return self.values[self.labels.index(label)]

    def as_dict(self) -> Dict[str, float]:
        return dict(zip(self.labels, self.values))
