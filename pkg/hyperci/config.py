from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from hyperci.dismantling import ProtocolConfig, Strategy, StrategyKind


class LogLevel(Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class LoggingConfig(BaseModel):
    enabled: bool = Field(default=True, description="Logging enabled")
    log_level: LogLevel = Field(default=LogLevel.WARNING, description="Logging level")
    log_file: Optional[str] = Field(default=None, description="Also log to this file")
    color: bool = Field(
        default=True, description="Colour levels on a terminal (NO_COLOR disables)"
    )


class Command(str, Enum):
    STATS = "stats"
    RANK = "rank"
    DISMANTLE = "dismantle"
    COMPARE = "compare"
    SWEEP_L = "sweep-l"


class OutputConfig(BaseModel):
    csv_path: Optional[Path] = Field(None, description="CSV output file")
    json_path: Optional[Path] = Field(None, description="Trajectory JSON output file")
    svg_path: Optional[Path] = Field(None, description="ANC curve SVG output file")


DEFAULT_METHODS = ("hd", "hda", "hhd", "hhda", "ci", "hyperci")


class RunConfig(BaseModel):
    command: Command = Field(..., description="Command to run")
    inputs: List[Path] = Field(..., min_length=1, description="Hyperedge-list files")
    methods: List[str] = Field(default_factory=list, description="Method tokens, M[:L]")
    radii: List[int] = Field(default_factory=list, description="L values for sweep-l")
    top: Optional[int] = Field(None, ge=1, description="Rows printed by rank")
    protocol: ProtocolConfig = Field(default_factory=ProtocolConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    deterministic: Literal[True] = Field(
        True, description="Runs are seedless and always reproducible"
    )

    @model_validator(mode="after")
    def validate_command(self) -> "RunConfig":
        command = self.command
        single_input = command in (Command.RANK, Command.DISMANTLE)
        if single_input and len(self.inputs) != 1:
            raise ValueError(f"'{command.value}' takes exactly one input")

        if command in (Command.RANK, Command.DISMANTLE, Command.SWEEP_L):
            if len(self.methods) != 1:
                raise ValueError(f"'{command.value}' takes exactly one method")
        if command == Command.COMPARE and not self.methods:
            raise ValueError("'compare' needs at least one method")

        strategies = self.strategies()
        tokens = [strategy.token for strategy in strategies]
        if len(set(tokens)) != len(tokens):
            raise ValueError(f"duplicate methods: {', '.join(self.methods)}")

        if command == Command.SWEEP_L:
            if strategies[0].kind not in (StrategyKind.CI, StrategyKind.HYPERCI):
                raise ValueError("'sweep-l' method must be ci or hyperci")
            if ":" in self.methods[0]:
                raise ValueError("'sweep-l' takes L values from --ls, not the method")
            if not self.radii:
                raise ValueError("'sweep-l' needs at least one L value")
            if any(radius < 1 for radius in self.radii):
                raise ValueError("every L must be at least 1")
            if len(set(self.radii)) != len(self.radii):
                raise ValueError("duplicate L values")

        if self.output.json_path is not None and command != Command.DISMANTLE:
            raise ValueError("--json is only available for 'dismantle'")
        if self.output.svg_path is not None and command in (Command.STATS, Command.RANK):
            raise ValueError(f"--svg is not available for '{command.value}'")
        if self.output.csv_path is not None and command == Command.RANK:
            raise ValueError("--csv is not available for 'rank'")
        return self

    def strategies(self) -> List[Strategy]:
        return [
            Strategy.parse(token, adaptive_ci=self.protocol.adaptive_ci)
            for token in self.methods
        ]
