from .types import Batch, StopCondition, Strategy, StrategyKind, Trajectory
from .config import ProtocolConfig
from .core import anc, batch_size_for, dismantle
from .experiments import compare, l_sweep
