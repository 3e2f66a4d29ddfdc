import json

from typing import Any

from pydantic import ValidationError

from hyperci.dismantling import Trajectory
from hyperci.errors import TrajectoryFormatError

CSV_HEADER = "batch,removed_nodes,frac_removed,sigma_remaining,sigma_original,ratio"
DECIMALS = 6


def _round_floats(value: Any) -> Any:
    if isinstance(value, float):
        return round(value, DECIMALS)
    if isinstance(value, dict):
        return {key: _round_floats(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_round_floats(item) for item in value]
    return value


def write_trajectory_csv(trajectory: Trajectory) -> str:
    rows = [CSV_HEADER]
    for batch in trajectory.batches:
        rows.append(
            ",".join(
                [
                    str(batch.index),
                    ";".join(batch.removed),
                    f"{batch.frac_removed:.{DECIMALS}f}",
                    f"{batch.sigma_remaining:.{DECIMALS}f}",
                    f"{batch.sigma_original:.{DECIMALS}f}",
                    f"{batch.ratio:.{DECIMALS}f}",
                ]
            )
        )
    return "\n".join(rows) + "\n"


def write_trajectory_json(trajectory: Trajectory) -> str:
    """Reals are rounded to the same 6 decimals the CSV carries."""
    payload = _round_floats(trajectory.model_dump(mode="json"))
    return json.dumps(payload, indent=2) + "\n"


def read_trajectory_json(text: str) -> Trajectory:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise TrajectoryFormatError(f"invalid trajectory JSON: {e}") from e

    try:
        return Trajectory.model_validate(payload)
    except ValidationError as e:
        errors = e.errors()
        error = next((err for err in errors if err["type"] == "missing"), errors[0])
        key = ".".join(str(part) for part in error["loc"])
        if error["type"] == "missing":
            raise TrajectoryFormatError(f"missing required key '{key}'", key=key) from e
        raise TrajectoryFormatError(f"invalid value for '{key}': {error['msg']}", key=key) from e


def rounded(trajectory: Trajectory) -> Trajectory:
    """The trajectory as it reads back from its JSON form."""
    return Trajectory.model_validate(_round_floats(trajectory.model_dump(mode="json")))
