"""Worker fan-out for verification sweeps.

``SweepScheduler`` runs independent work items either inline or on a
process pool.  Results always come back in input order, so sweep reports do
not depend on scheduling.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

from pico_ioc import component

from .logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@component(scope="singleton")
class SweepScheduler:
    """Maps a function over sweep items with a bounded number of workers.

    The worker limit is read from the ``RIGIDLAB_MAX_WORKERS`` environment
    variable (default: ``1``, meaning inline execution).  With more than one
    worker the function and items must be picklable.

    Example:
        >>> scheduler.map(engine.is_gpr_of_chain, chains)
    """

    def __init__(self):
        self.limit = max(1, int(os.getenv("RIGIDLAB_MAX_WORKERS", "1")))

    @property
    def parallel(self) -> bool:
        return self.limit > 1

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Apply *fn* to every item and return the results in input order."""
        work = list(items)
        if not self.parallel or len(work) < 2:
            return [fn(item) for item in work]
        workers = min(self.limit, len(work))
        logger.info("Dispatching %d items to %d worker processes", len(work), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, work, chunksize=max(1, len(work) // (4 * workers))))
