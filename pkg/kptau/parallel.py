'''
Process-pool map used for the per-monomial operator maps. Tasks are zipped
argument tuples, as in the pipeline's pool.map(func, zip(...)) calls, and
results come back in input order so reductions stay deterministic.
'''

import logging
from multiprocessing import Pool

logger = logging.getLogger(__name__)

THREADS = 1


def set_threads(threads):
    '''
    Set the default worker count used when callers pass threads=None.
    '''
    global THREADS
    threads = int(threads)
    if threads < 1:
        raise ValueError('threads must be >= 1, not {}.'.format(threads))
    THREADS = threads


def resolve_threads(threads=None):
    return THREADS if threads is None else max(1, int(threads))


def parallel_map(func, tasks, threads=None, min_tasks=64):
    '''
    map(func, tasks) on a Pool of `threads` workers. Small task lists and
    threads == 1 run inline.
    '''
    tasks = list(tasks)
    threads = resolve_threads(threads)
    if threads == 1 or len(tasks) < min_tasks:
        return [func(task) for task in tasks]
    logger.debug('Mapping %d tasks over %d workers.', len(tasks), threads)
    pool = Pool(threads)
    try:
        return pool.map(func, tasks)
    finally:
        pool.close()
        pool.join()
