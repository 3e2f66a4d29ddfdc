from .core import CentralityMeasure, CentralityRegistry, rank, score
from .types import CentralityScores

# Import measures to be registered
from .measures import (
    CollectiveInfluence,
    HyperCollectiveInfluence,
    HyperDegree,
    ProjectedDegree,
    score_ci,
    score_hd,
    score_hhd,
    score_hyper_ci,
)
