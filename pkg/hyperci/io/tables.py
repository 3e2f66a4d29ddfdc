from typing import Dict, List, Mapping, Sequence, Tuple

from pydantic import BaseModel, Field

from hyperci.hypergraph import DatasetStats


class ResultTable(BaseModel):
    """ANC values with one row per dataset and one column per run."""

    columns: List[str] = Field(..., min_length=1)
    rows: List[Tuple[str, Dict[str, float]]] = Field(default_factory=list)

    def add(self, dataset: str, values: Mapping[str, float]) -> None:
        missing = [column for column in self.columns if column not in values]
        if missing:
            raise ValueError(f"Row '{dataset}' has no value for: {', '.join(missing)}")
        self.rows.append((dataset, dict(values)))

    def to_csv(self) -> str:
        lines = [",".join(["dataset", *self.columns])]
        for dataset, values in self.rows:
            cells = [f"{values[column]:.6f}" for column in self.columns]
            lines.append(",".join([dataset, *cells]))
        return "\n".join(lines) + "\n"


def comparison_table(methods: Sequence[str]) -> ResultTable:
    return ResultTable(columns=list(methods))


def sweep_table(radii: Sequence[int]) -> ResultTable:
    return ResultTable(columns=[f"L={radius}" for radius in radii])


def write_stats_csv(rows: Sequence[Tuple[str, DatasetStats]]) -> str:
    lines = ["dataset,nodes,hyperedges,avg_hyper_degree,avg_hyperedge_size"]
    for dataset, stats in rows:
        lines.append(
            f"{dataset},{stats.node_count},{stats.hyperedge_count},"
            f"{stats.avg_hyper_degree:.2f},{stats.avg_hyperedge_size:.2f}"
        )
    return "\n".join(lines) + "\n"
