from pydantic import BaseModel, Field, field_validator

from hyperci.hypergraph import Normalization

from .types import StopCondition


class ProtocolConfig(BaseModel):
    """Removal protocol shared by every run of a comparison or sweep."""

    batch_fraction: float = Field(
        0.01, gt=0.0, le=1.0, description="Share of the original nodes removed per batch"
    )
    stop: StopCondition = Field(
        default_factory=StopCondition, description="When the removal loop ends"
    )
    norm: Normalization = Field(
        Normalization.REMAINING, description="Connectivity denominator"
    )
    per_node: bool = Field(
        False, description="Adaptive strategies rescore after every single removal"
    )
    adaptive_ci: bool = Field(False, description="Run the CI baseline adaptively")
    workers: int = Field(1, ge=1, description="Parallel runs for compare and sweeps")
    progress: bool = Field(False, description="Show a progress bar per run")

    @field_validator("stop", mode="before")
    @classmethod
    def parse_stop(cls, value):
        if isinstance(value, str):
            return StopCondition.fields_from_text(value)
        return value
