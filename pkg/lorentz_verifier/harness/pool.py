"""Order-preserving process pool for independent trials."""

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

from ..errors import VerifierInputError
from ..verifier_logging import get_logger

logger = get_logger()

T = TypeVar("T")
R = TypeVar("R")

WORKERS_ENV = "LORENTZ_VERIFIER_WORKERS"
MAX_WORKERS = 64


def resolve_workers(workers: Optional[int] = None) -> int:
    """Explicit value, else ``LORENTZ_VERIFIER_WORKERS``, else 1."""
    if workers is None:
        raw = os.environ.get(WORKERS_ENV)
        if not raw:
            return 1
        try:
            workers = int(raw)
        except ValueError:
            raise VerifierInputError(f"{WORKERS_ENV} must be an integer, got {raw!r}", "workers")
    if not 1 <= workers <= MAX_WORKERS:
        raise VerifierInputError(f"workers must lie in [1, {MAX_WORKERS}], got {workers}",
                                 "workers")
    return workers


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1,
                chunksize: int = 4) -> list[R]:
    """``[fn(item) for item in items]``, optionally across worker processes.

    Results come back in input order either way, so aggregation downstream
    does not depend on the worker count.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.debug(f"dispatching {len(items)} items to {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items, chunksize=chunksize))
