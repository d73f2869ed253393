# utils/locking.py

import logging
import os
import random
import time
from contextlib import contextmanager
from typing import Iterator

from filelock import FileLock, Timeout

from ..exceptions import LockAcquisitionError

logger = logging.getLogger(__name__)


def lock_path_for(target_path: str) -> str:
    return f"{target_path}.lock"


@contextmanager
def report_lock(target_path: str, timeout: float = 10, attempts: int = 5) -> Iterator[FileLock]:
    """
    Hold the lock next to a report while it is written.

    Concurrent `--out` writers to the same path are serialized; a busy lock is
    retried with jittered exponential backoff.

    Args:
        target_path (str): The report path; the lock lives at `<target_path>.lock`.
        timeout (float): Seconds to wait on each attempt.
        attempts (int): Number of attempts before giving up.

    Raises:
        LockAcquisitionError: If every attempt times out.
    """
    directory = os.path.dirname(target_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    path = lock_path_for(target_path)
    lock = FileLock(path, timeout=timeout)

    for attempt in range(attempts):
        try:
            lock.acquire()
            break
        except Timeout:
            if attempt == attempts - 1:
                raise LockAcquisitionError(f"Failed to acquire lock {path} after {attempts} attempts")
            backoff = min(0.1 * (2 ** attempt) * (1 + random.random()), 5.0)
            logger.warning("[Report] lock %s busy, retrying in %.2fs", path, backoff)
            time.sleep(backoff)

    try:
        yield lock
    finally:
        lock.release()
