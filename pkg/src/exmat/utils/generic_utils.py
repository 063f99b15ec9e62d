#   _____ ______ _   _ ______ _____  _____ _____          _    _ _______ _____ _       _____
#  / ____|  ____| \ | |  ____|  __ \|_   _/ ____|        | |  | |__   __|_   _| |     / ____|
# | |  __| |__  |  \| | |__  | |__) | | || |             | |  | |  | |    | | | |    | (___
# | | |_ |  __| | . ` |  __| |  _  /  | || |             | |  | |  | |    | | | |     \___ \
# | |__| | |____| |\  | |____| | \ \ _| || |____  ______ | |__| |  | |   _| |_| |____ ____) |
#  \_____|______|_| \_|______|_|  \_\_____\_____||______| \____/   |_|  |_____|______|_____/

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import, division, print_function

import contextlib
from itertools import chain, combinations
import multiprocessing
import warnings

__all__ = [
    'ADVISORY_GROUND_LIMIT',
    'DEFAULT_EDGE_PROB',
    'DEFAULT_GF2_ROWS',
    'SEED_ENV_VAR',
    'InvariantViolation',
    'PreconditionError',
    'canonical',
    'create_pool',
    'kwargs_check',
    'powerset'
]

# exhaustive oracles warn above this many ground elements
ADVISORY_GROUND_LIMIT = 20

# defaults for random instances
DEFAULT_EDGE_PROB = 0.5
DEFAULT_GF2_ROWS = 4

# environment variable consulted by the generator command
SEED_ENV_VAR = 'EXMAT_SEED'

class PreconditionError(ValueError):

    """Raised when an operation is called outside of its precondition, e.g.
    with a dependent set where an independent one is required or with a set
    that is not a basis.
    """

class InvariantViolation(RuntimeError):

    """Raised when a certificate produced by an algorithm fails to validate.
    This always indicates a bug.
    """

# sorts elements into the canonical element order
def canonical(elements):
    return tuple(sorted(elements))

# process pool preferring the 'fork' start method
@contextlib.contextmanager
def create_pool(*args, **kwargs):
    if 'fork' not in multiprocessing.get_all_start_methods():
        warnings.warn("'fork' is not available as a multiprocessing start method, "
                      + "ExMat multicore functionality may not work properly")
        with multiprocessing.Pool(*args, **kwargs) as pool:
            yield pool
    else:
        with multiprocessing.get_context('fork').Pool(*args, **kwargs) as pool:
            yield pool

# raises TypeError if unexpected keyword left in kwargs
def kwargs_check(name, kwargs, allowed=None):
    allowed = frozenset() if allowed is None else frozenset(allowed)

    for k in kwargs:
        if k in allowed:
            continue
        raise TypeError(name + '() got an unexpected keyword argument \'{}\''.format(k))

# all subsets of the given elements, smallest first, each in canonical order
def powerset(elements):
    s = canonical(elements)
    return chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))

