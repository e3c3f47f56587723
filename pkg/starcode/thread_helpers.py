from typing import Callable, Iterable, List, Optional, TypeVar
import concurrent.futures
import logging
import os

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')

THREADS_ENV_VAR = 'STARCODE_THREADS'


def worker_count(env: Optional[dict] = None) -> int:
    """Number of workers from STARCODE_THREADS; 0 or unset means cpu_count."""
    if env is None:
        env = dict(os.environ)
    value = env.get(THREADS_ENV_VAR, '').strip()
    if value:
        try:
            count = int(value)
        except ValueError:
            raise ValueError('%s must be an integer, got %r' %
                             (THREADS_ENV_VAR, value))
        if count < 0:
            raise ValueError('%s must be non-negative, got %r' %
                             (THREADS_ENV_VAR, value))
        if count > 0:
            return count
    return os.cpu_count() or 1


def map_trials(fn: Callable[[T], R], items: Iterable[T],
               workers: Optional[int] = None) -> List[R]:
    """Applies `fn` to every item, returning results in input order.

    With one worker everything runs in the calling thread.
    """
    items = list(items)
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    logger.debug('running %d trials on %d threads', len(items), workers)
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))
