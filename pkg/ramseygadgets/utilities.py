"""
# Ramsey Gadgets: utilities.py

Licensed under "MIT No Attribution" (MIT-0), see LICENSE.

Common utility functions.
"""

import hashlib
import multiprocessing
import re


def normalise_edge(u, v):
    if u < v:
        return u, v

    return v, u


def iterate_bits(mask):
    """
    Iterate over the indices of the set bits of an integer, least significant first.
    """
    while mask:
        low_bit = mask & -mask
        yield low_bit.bit_length() - 1
        mask ^= low_bit


def parse_integer_list(string):
    """
    Parse a comma-separated list of integers such as `3,3` or `1, 2`.
    """
    if re.fullmatch(pattern=r'\s* -? [0-9]+ (?: \s* , \s* -? [0-9]+ )* \s*', string=string, flags=re.VERBOSE) is None:
        raise ValueError(f'`{string}` is not a comma-separated list of integers')

    return [int(item) for item in string.split(',')]


def parse_edge_argument(string):
    """
    Parse an edge argument of the form `u,v`.

    The order is kept, since some constructions read the endpoints positionally.
    """
    integers = parse_integer_list(string)
    if len(integers) != 2:
        raise ValueError(f'`{string}` is not an edge of the form `u,v`')

    return integers[0], integers[1]


def compute_digest(data):
    if isinstance(data, str):
        data = data.encode()

    return hashlib.sha256(data).hexdigest()


def map_in_order(function, arguments, jobs):
    """
    Apply a function to each argument, yielding results in argument order.

    With `jobs` greater than 1 the calls are fanned out to a process pool,
    but results are still consumed in submission order,
    so the output never depends on scheduling.
    The function must be defined at module level (so that it can be pickled).
    Closing the generator early terminates the pool.
    """
    if jobs is None or jobs <= 1:
        for argument in arguments:
            yield function(argument)
        return

    with multiprocessing.Pool(processes=jobs) as pool:
        yield from pool.imap(function, arguments, chunksize=1)


def first_in_order(function, arguments, jobs):
    """
    Return the first result (in argument order) that is not None, or None.
    """
    results = map_in_order(function, arguments, jobs)
    try:
        for result in results:
            if result is not None:
                return result
    finally:
        results.close()

    return None


def first_as_completed(function, arguments, jobs):
    """
    Return whichever non-None result a worker produces first, or None.

    Only for callers that explicitly accept a scheduling-dependent answer.
    """
    if jobs is None or jobs <= 1:
        return first_in_order(function, arguments, jobs)

    with multiprocessing.Pool(processes=jobs) as pool:
        for result in pool.imap_unordered(function, arguments, chunksize=1):
            if result is not None:
                return result

    return None
