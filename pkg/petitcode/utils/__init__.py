from typing import Any, Callable, List, Optional, Tuple

import os
import sys
import time
import random
import concurrent.futures

import numpy as np

from petitcode import logger


def set_seed(seed: Optional[int] = None) -> int:
    """
    Set the seed for the random number generators

    Due to NumPy's legacy seeding constraint the seed must be between 0 and 2**32 - 1.
    Every sampled check also takes an explicit ``numpy.random.Generator`` created from
    the returned seed, so runs with the same seed are reproducible

    Modified packages:

    - random
    - numpy

    Example::

        # fixed seed
        >>> from petitcode.utils import set_seed
        >>> set_seed(42)
        [petitcode:INFO] Seed: 42
        42

        # random seed
        >>> from petitcode.utils import set_seed
        >>> set_seed()
        [petitcode:INFO] Seed: 1776118066
        1776118066

    :param seed: The seed to set. Is None, a random seed will be generated (default: ``None``)
    :type seed: int, optional

    :return: Seed
    :rtype: int
    """
    # generate a random seed
    if seed is None:
        try:
            seed = int.from_bytes(os.urandom(4), byteorder=sys.byteorder)
        except NotImplementedError:
            seed = int(time.time() * 1000)
        seed %= 2 ** 32  # NumPy's legacy seeding seed must be between 0 and 2**32 - 1

    random.seed(seed)
    np.random.seed(seed)

    logger.info("Seed: {}".format(seed))
    return seed


def generate_equally_spaced_scopes(num_items: int, num_workers: int) -> List[int]:
    """Generate a list of equally spaced scopes for the workers of a partitioned scan

    :param num_items: Number of candidates to scan
    :type num_items: int
    :param num_workers: Number of workers
    :type num_workers: int

    :raises ValueError: If the number of workers is greater than the number of items

    :return: List of equally spaced scopes
    :rtype: List[int]
    """
    scopes = [int(num_items / num_workers)] * num_workers
    if sum(scopes):
        scopes[-1] += num_items - sum(scopes)
    else:
        raise ValueError("The number of workers ({}) is greater than the number of items ({})" \
            .format(num_workers, num_items))
    return scopes


def partitioned_search(search: Callable[[int, int], Any], num_items: int, threads: int = 1) -> List[Any]:
    """Run a search over ``range(num_items)`` split into consecutive scopes

    ``search(start, stop)`` scans one scope and returns its partial result.  The
    partial results are returned in scope order, so the merged outcome does not
    depend on the number of threads

    Example::

        >>> partitioned_search(lambda start, stop: sum(range(start, stop)), 10, threads=3)
        [3, 12, 30]

    :param search: Function scanning the half-open index range ``[start, stop)``
    :type search: callable
    :param num_items: Number of candidates
    :type num_items: int
    :param threads: Number of worker threads (default: ``1``)
    :type threads: int, optional

    :return: Partial results, one per scope, in scope order
    :rtype: list
    """
    threads = max(1, min(threads, num_items)) if num_items else 1
    if threads == 1:
        return [search(0, num_items)]
    bounds = []
    start = 0
    for scope in generate_equally_spaced_scopes(num_items, threads):
        bounds.append((start, start + scope))
        start += scope
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(search, start, stop) for start, stop in bounds]
        return [future.result() for future in futures]


def first_found(partials: List[Optional[Tuple[int, Any]]]) -> Optional[Tuple[int, Any]]:
    """Merge partial ``(index, witness)`` results keeping the smallest index"""
    found = [partial for partial in partials if partial is not None]
    return min(found, key=lambda item: item[0]) if found else None
