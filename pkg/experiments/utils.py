import yaml

from pathlib import Path
from typing import Any, Dict

from pydantic import BaseModel, Field, field_validator

from hyperci.config import DEFAULT_METHODS, LoggingConfig
from hyperci.dismantling import ProtocolConfig, Strategy


class ExperimentConfig(BaseModel):
    """Dataset list and protocol for the table runs."""

    datasets: Dict[str, Path] = Field(..., min_length=1, description="Name -> hyperedge-list file")
    methods: list[str] = Field(default_factory=lambda: list(DEFAULT_METHODS))
    radii: list[int] = Field(default_factory=lambda: [1, 2, 3])
    protocol: ProtocolConfig = Field(default_factory=ProtocolConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    output_dir: Path = Field(Path("results/benchmark"))

    @field_validator("radii")
    @classmethod
    def validate_radii(cls, radii: list[int]) -> list[int]:
        if not radii or any(radius < 1 for radius in radii):
            raise ValueError("radii must be a non-empty list of values >= 1")
        if len(set(radii)) != len(radii):
            raise ValueError("duplicate L values")
        return radii

    def strategies(self) -> list[Strategy]:
        return [
            Strategy.parse(token, adaptive_ci=self.protocol.adaptive_ci)
            for token in self.methods
        ]


def clean_data(d: Any) -> Any:
    """
    Recursively turn tuples into lists and paths into strings so the data dumps
    as plain YAML.

    Args:
        d (Any): The value to clean.

    Returns:
        Any: The cleaned value.
    """
    if isinstance(d, dict):
        return {k: clean_data(v) for k, v in d.items()}
    if isinstance(d, tuple) or isinstance(d, list):
        return [clean_data(v) for v in d]
    if isinstance(d, Path):
        return str(d)
    return d


def load_config(path: str) -> dict:
    """
    Load configuration from a YAML file.

    Args:
        path (str): Path to the YAML configuration file.

    Returns:
        dict: Configuration dictionary.
    """
    with open(path, "r") as file:
        config = yaml.safe_load(file)
    return config or {}


def save_config(config: dict, path: str) -> None:
    """
    Save configuration to a YAML file.

    Args:
        path (str): Path to the YAML configuration file.
        config (dict): Configuration dictionary to save.
    """
    clean_config = clean_data(config)
    with open(path, "w") as file:
        yaml.dump(clean_config, file, sort_keys=False)
