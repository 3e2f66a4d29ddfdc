from enum import Enum
from typing import Any, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from hyperci.errors import StrategyError
from hyperci.hypergraph import Normalization


class StrategyKind(str, Enum):
    HD = "hd"
    HDA = "hda"
    HHD = "hhd"
    HHDA = "hhda"
    CI = "ci"
    HYPERCI = "hyperci"

    @property
    def measure(self) -> str:
        """Name of the centrality measure behind the strategy."""
        return {
            StrategyKind.HD: "hd",
            StrategyKind.HDA: "hd",
            StrategyKind.HHD: "hhd",
            StrategyKind.HHDA: "hhd",
            StrategyKind.CI: "ci",
            StrategyKind.HYPERCI: "hyperci",
        }[self]

    @property
    def uses_radius(self) -> bool:
        return self in (StrategyKind.CI, StrategyKind.HYPERCI)


_ALWAYS_ADAPTIVE = {StrategyKind.HDA, StrategyKind.HHDA, StrategyKind.HYPERCI}
_NEVER_ADAPTIVE = {StrategyKind.HD, StrategyKind.HHD}


class Strategy(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: StrategyKind = Field(..., description="Dismantling policy")
    radius: Optional[int] = Field(None, ge=1, description="Ball radius L (ci, hyperci)")
    adaptive: bool = Field(
        False, description="Rescore on the current hypergraph before every batch"
    )

    @model_validator(mode="before")
    @classmethod
    def fill_defaults(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data

        data = dict(data)
        kind = StrategyKind(data.get("kind"))

        if kind.uses_radius:
            if data.get("radius") is None:
                data["radius"] = 1
        elif data.get("radius") is not None:
            raise ValueError(f"Strategy '{kind.value}' does not take a radius")

        adaptive = data.get("adaptive")
        if kind in _ALWAYS_ADAPTIVE:
            if adaptive is False:
                raise ValueError(f"Strategy '{kind.value}' is always adaptive")
            data["adaptive"] = True
        elif kind in _NEVER_ADAPTIVE:
            if adaptive is True:
                raise ValueError(f"Strategy '{kind.value}' is never adaptive")
            data["adaptive"] = False
        elif adaptive is None:
            data["adaptive"] = False

        return data

    @classmethod
    def parse(cls, token: str, adaptive_ci: bool = False) -> "Strategy":
        """Parse a method token such as ``hd``, ``hyperci`` or ``ci:2``."""
        name, _, radius_text = token.strip().lower().partition(":")
        try:
            kind = StrategyKind(name)
        except ValueError:
            valid = ", ".join(k.value for k in StrategyKind)
            raise StrategyError(f"Unknown method '{name}' (expected one of: {valid})") from None

        radius = None
        if radius_text:
            if not kind.uses_radius:
                raise StrategyError(f"Method '{name}' does not take an L suffix")
            try:
                radius = int(radius_text)
            except ValueError:
                raise StrategyError(f"Invalid L in method token '{token}'") from None
            if radius < 1:
                raise StrategyError(f"L must be at least 1 in method token '{token}'")

        adaptive = adaptive_ci if kind == StrategyKind.CI else None
        return cls(kind=kind, radius=radius, adaptive=adaptive)

    @property
    def token(self) -> str:
        if self.kind.uses_radius:
            return f"{self.kind.value}:{self.radius}"
        return self.kind.value


class StopCondition(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: Literal["all", "fraction", "sigma_below"] = Field(
        "all", description="When the removal loop ends"
    )
    value: Optional[float] = Field(None, description="Fraction or connectivity threshold")

    @model_validator(mode="after")
    def validate_value(self) -> "StopCondition":
        if self.mode == "all":
            if self.value is not None:
                raise ValueError("stop condition 'all' takes no value")
        elif self.value is None:
            raise ValueError(f"stop condition '{self.mode}' needs a value")
        elif self.mode == "fraction" and not 0.0 < self.value <= 1.0:
            raise ValueError("stop fraction must be in (0, 1]")
        elif self.mode == "sigma_below" and not 0.0 <= self.value <= 1.0:
            raise ValueError("stop connectivity threshold must be in [0, 1]")
        return self

    @classmethod
    def parse(cls, text: str) -> "StopCondition":
        """Parse ``all``, ``frac=F`` or ``sigma=T``."""
        return cls(**cls.fields_from_text(text))

    @staticmethod
    def fields_from_text(text: str) -> dict:
        text = text.strip().lower()
        if text == "all":
            return {"mode": "all"}

        key, sep, value = text.partition("=")
        modes = {"frac": "fraction", "fraction": "fraction", "sigma": "sigma_below"}
        if not sep or key not in modes:
            raise StrategyError(f"Invalid stop condition '{text}' (use all, frac=F or sigma=T)")
        try:
            number = float(value)
        except ValueError:
            raise StrategyError(f"Invalid stop value in '{text}'") from None
        return {"mode": modes[key], "value": number}

    def reached(self, removed_fraction: float, sigma: float) -> bool:
        if self.mode == "fraction":
            return removed_fraction >= self.value
        if self.mode == "sigma_below":
            return sigma < self.value
        return False

    def __str__(self) -> str:
        if self.mode == "all":
            return "all"
        key = "frac" if self.mode == "fraction" else "sigma"
        return f"{key}={self.value:g}"


class Batch(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=1)
    removed: Tuple[str, ...] = Field(..., description="Labels removed in this batch")
    frac_removed: float = Field(..., ge=0.0, le=1.0)
    sigma_remaining: float = Field(..., ge=0.0, le=1.0)
    sigma_original: float = Field(..., ge=0.0, le=1.0)
    ratio: float = Field(..., ge=0.0, description="sigma after the batch over initial sigma")


class Trajectory(BaseModel):
    """Record of one dismantling run; field order is the serialized key order."""

    format_version: Literal[1] = 1
    tool_version: str
    strategy: Strategy
    batch_fraction: float = Field(..., gt=0.0, le=1.0)
    batch_size: int = Field(..., ge=1)
    stop: StopCondition
    norm: Normalization
    per_node: bool = False
    node_count: int = Field(..., ge=1, description="Node count before any removal")
    initial_sigma: float = Field(..., gt=0.0, le=1.0)
    anc: Optional[float] = None
    batches: List[Batch] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_batches(self) -> "Trajectory":
        seen = set()
        for batch in self.batches:
            if seen.intersection(batch.removed):
                raise ValueError(f"batch {batch.index} removes a node twice")
            seen.update(batch.removed)
        if len(seen) > self.node_count:
            raise ValueError("more nodes removed than the hypergraph had")
        return self

    @property
    def removed_count(self) -> int:
        return sum(len(batch.removed) for batch in self.batches)

    def removal_order(self) -> List[str]:
        return [label for batch in self.batches for label in batch.removed]

    def curve(self) -> List[Tuple[float, float]]:
        """Points (fraction removed, normalized connectivity), from the intact start."""
        return [(0.0, 1.0)] + [(batch.frac_removed, batch.ratio) for batch in self.batches]
