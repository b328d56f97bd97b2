# src/resilience/__init__.py
# Guards for long-running computations: step budgets and the sweep worker pool

from resilience.step_budget import StepBudget, StepBudgetExceeded, StepBudgetConfig
from resilience.worker_pool import WorkerPool, WorkerPoolConfig

__all__ = [
    "StepBudget",
    "StepBudgetExceeded",
    "StepBudgetConfig",
    "WorkerPool",
    "WorkerPoolConfig",
]
