# src/resilience/step_budget.py
# Step budget for iterative algorithms that are expected to terminate.
#
# The Grothendieck basis expansion peels one basis element per step and must reach
# a zero remainder. A correct implementation always terminates well inside the
# budget; running out means an arithmetic or decoding bug, so the loop aborts with
# StepBudgetExceeded instead of spinning.
#
# The default budget is derived from the size of the input:
#     10 * (number of terms + total degree) ** 2
# GROTH_STEP_BUDGET (settings.engine.step_budget) replaces it with a fixed number.

from dataclasses import dataclass
from typing import Optional

from errors import InvariantBreach
from logger import get_logger

logger = get_logger(__name__)


@dataclass
class StepBudgetConfig:
    """
    Configuration for a step budget.
    """
    # Maximum number of steps before the loop is declared non-terminating
    max_steps: int = 1000


class StepBudgetExceeded(InvariantBreach):
    """
    Raised when an iterative algorithm uses up its step budget.
    """
    pass


class StepBudget:
    """
    Counts steps of one run of an iterative algorithm.

    Usage:
        budget = StepBudget.for_size("expand", n_terms, degree)
        while remainder:
            budget.record_step()
            ...
    """

    def __init__(self, name: str, config: Optional[StepBudgetConfig] = None):
        self.name = name
        self.config = config or StepBudgetConfig()
        self.steps_taken = 0

    @classmethod
    def for_size(cls, name: str, n_terms: int, degree: int, override: Optional[int] = None) -> "StepBudget":
        """
        Build a budget from the size of the input, or from `override` when given.
        When `override` is None the configured GROTH_STEP_BUDGET is consulted.
        """
        if override is None:
            from config import settings
            override = settings.engine.step_budget
        if override is not None:
            max_steps = override
        else:
            max_steps = 10 * (n_terms + degree) ** 2
        return cls(name, StepBudgetConfig(max_steps=max(max_steps, 1)))

    def record_step(self) -> None:
        """
        Record one step.

        Raises:
            StepBudgetExceeded: if this step goes past max_steps
        """
        self.steps_taken += 1
        if self.steps_taken > self.config.max_steps:
            logger.error(
                f"Step budget '{self.name}' exhausted after {self.config.max_steps} steps"
            )
            raise StepBudgetExceeded(
                f"non-termination: '{self.name}' exceeded {self.config.max_steps} steps"
            )

    @property
    def remaining(self) -> int:
        return max(self.config.max_steps - self.steps_taken, 0)

    def get_metrics(self) -> dict:
        """
        Snapshot of budget usage.
        """
        used = (
            self.steps_taken / self.config.max_steps * 100
            if self.config.max_steps > 0 else 0
        )
        return {
            "name": self.name,
            "steps_taken": self.steps_taken,
            "max_steps": self.config.max_steps,
            "budget_used": used,
            "budget_remaining": self.remaining,
        }
