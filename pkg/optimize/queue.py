"""
Evaluation queue for concurrent lattice-point evaluation.

Points go through an asyncio.Queue; each worker hands the blocking numerical
work to a shared thread pool. Results are keyed by lattice index, so the
merged output does not depend on completion order.
"""

import asyncio
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

from constants.models import ConvexityParams
from optimize.models import SearchRow, SkippedPoint
from utils.errors import ConvergenceError
from utils.logging_config import get_logger

logger = get_logger(__name__)

Evaluator = Callable[[int, ConvexityParams], SearchRow]


class EvaluationQueue:
    """Evaluates lattice points on a bounded pool of workers."""

    def __init__(self, evaluate: Evaluator, max_workers: int = 4):
        """
        Initialize evaluation queue.

        Args:
            evaluate: Blocking function computing one SearchRow
            max_workers: Maximum concurrent evaluations
        """
        self.evaluate = evaluate
        self.max_workers = max(1, max_workers)

        self.queue: asyncio.Queue = asyncio.Queue()
        self.rows: Dict[int, SearchRow] = {}
        self.skipped: Dict[int, SkippedPoint] = {}
        self.failures: List[Tuple[int, Exception]] = []

        self.workers: list = []
        self.executor: Optional[ThreadPoolExecutor] = None

        logger.debug(f"EvaluationQueue initialized (max_workers: {self.max_workers})")

    async def start_workers(self):
        """Start worker tasks to process queue."""
        self.executor = ThreadPoolExecutor(max_workers=self.max_workers, thread_name_prefix="lattice")
        self.workers = [
            asyncio.create_task(self._worker(i))
            for i in range(self.max_workers)
        ]

    async def stop_workers(self):
        """Stop all worker tasks and release the thread pool."""
        for worker in self.workers:
            worker.cancel()
        await asyncio.gather(*self.workers, return_exceptions=True)
        self.workers = []
        if self.executor is not None:
            self.executor.shutdown(wait=True)
            self.executor = None

    async def _worker(self, worker_id: int):
        """
        Worker task that evaluates points from the queue.

        Args:
            worker_id: Worker identifier
        """
        loop = asyncio.get_running_loop()
        while True:
            try:
                index, params = await self.queue.get()
            except asyncio.CancelledError:
                break

            try:
                row = await loop.run_in_executor(self.executor, self.evaluate, index, params)
                self.rows[index] = row
            except ConvergenceError as e:
                self.skip(index, params.c, params.d, f"convergence: {e.message}")
            except Exception as e:
                # Re-raised by run() once the queue drains
                self.failures.append((index, e))
            finally:
                self.queue.task_done()

    def add_point(self, index: int, params: ConvexityParams):
        """Queue one admissible point."""
        self.queue.put_nowait((index, params))

    def skip(self, index: int, c: float, d: float, reason: str):
        """Record a point that will not be (or could not be) evaluated."""
        self.skipped[index] = SkippedPoint(index=index, c=c, d=d, reason=reason)
        logger.warning(f"Skipped lattice point {index} (c={c}, d={d}): {reason}")

    async def run(self) -> Tuple[List[SearchRow], List[SkippedPoint]]:
        """
        Evaluate everything queued so far.

        Returns:
            Rows and skipped points, each sorted by lattice index
        """
        await self.start_workers()
        try:
            await self.queue.join()
        finally:
            await self.stop_workers()

        if self.failures:
            index, error = min(self.failures, key=lambda item: item[0])
            raise error

        logger.info(
            f"Evaluated {len(self.rows)} lattice points, skipped {len(self.skipped)}"
        )
        return (
            [self.rows[i] for i in sorted(self.rows)],
            [self.skipped[i] for i in sorted(self.skipped)],
        )
