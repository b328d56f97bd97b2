# src/resilience/worker_pool.py
# Worker pool for exhaustive sweeps.
#
# Sweeps check thousands of independent cases (one involution, one permutation, one
# parameter tuple each). The pool runs them either in-process (jobs=1) or across
# worker processes, and always hands results back in input order so that reports
# are identical for every jobs setting.
#
# Worker processes inherit the caller's run id, so their log lines can be matched
# with the sweep that spawned them. Ctrl+C cancels all pending chunks.

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional

from logger import get_logger, setup_logging
from tracking import Run, adopt_run, current_run

logger = get_logger(__name__)


@dataclass
class WorkerPoolConfig:
    """
    Configuration for a worker pool.
    """
    # Number of worker processes; 1 means run in the calling process
    max_workers: int = 1

    # Cases handed to a worker per round trip
    chunk_size: int = 8


def _init_worker(run: Optional[Run], log_level: Optional[str]) -> None:
    # Runs once in every worker process
    setup_logging(log_level)
    adopt_run(run)


class WorkerPool:
    """
    Ordered map over independent cases.

    Usage:
        pool = WorkerPool("qd-thm", WorkerPoolConfig(max_workers=4))
        results = pool.map_ordered(check_case, cases, on_result=progress)

    `fn` must be a module-level function so it can be pickled.
    """

    def __init__(self, name: str, config: Optional[WorkerPoolConfig] = None):
        self.name = name
        self.config = config or WorkerPoolConfig()
        self._completed = 0
        self._elapsed = 0.0

        logger.debug(
            f"Worker pool '{name}' created: "
            f"max_workers={self.config.max_workers}, chunk_size={self.config.chunk_size}"
        )

    def map_ordered(
        self,
        fn: Callable[[Any], Any],
        items: Iterable[Any],
        on_result: Optional[Callable[[int, Any], None]] = None,
    ) -> List[Any]:
        """
        Apply `fn` to every item and return the results in input order.

        Args:
            fn: the per-case function
            items: the cases
            on_result: optional callback (index, result) called in order as results arrive
        """
        items = list(items)
        results: List[Any] = []
        start = time.perf_counter()

        if self.config.max_workers <= 1 or len(items) <= 1:
            for index, item in enumerate(items):
                result = fn(item)
                results.append(result)
                self._completed += 1
                if on_result:
                    on_result(index, result)
        else:
            from config import settings
            executor = ProcessPoolExecutor(
                max_workers=self.config.max_workers,
                initializer=_init_worker,
                initargs=(current_run(), settings.app.log_level),
            )
            interrupted = False
            try:
                # Executor.map yields in submission order
                for index, result in enumerate(
                    executor.map(fn, items, chunksize=self.config.chunk_size)
                ):
                    results.append(result)
                    self._completed += 1
                    if on_result:
                        on_result(index, result)
            except KeyboardInterrupt:
                interrupted = True
                logger.warning(f"Worker pool '{self.name}' interrupted; cancelling pending work")
                raise
            finally:
                executor.shutdown(wait=not interrupted, cancel_futures=True)

        self._elapsed += time.perf_counter() - start
        return results

    def get_metrics(self) -> dict:
        return {
            "name": self.name,
            "max_workers": self.config.max_workers,
            "chunk_size": self.config.chunk_size,
            "completed": self._completed,
            "elapsed_seconds": self._elapsed,
        }
