import logging
from collections import defaultdict
from itertools import permutations

from pinnacles.actions import iter_orbit
from pinnacles.admissibility import vale_sets
from pinnacles.config import check_exhaustive_limit
from pinnacles.counting import (
    canonical_arrangements,
    iter_fs_minimal_from_arrangement,
)
from pinnacles.permutation import Permutation, pinnacle_set
from pinnacles.utils import as_value_set

logger = logging.getLogger(__name__)


def iter_naive(P, n, limit=None):
    """
    Yield the permutations of [n] with pinnacle set ``P`` by scanning all of S_n.

    Permutations come in lexicographic order.

    Parameters
    ----------
    P: collection of int
        Pinnacle set.
    n: int
        Size of the permutations.
    limit: int, optional, default=None
        Largest n for which the scan is allowed. Defaults to
        ``pinnacles.config.max_naive_n()``.
    """
    P = as_value_set(P)
    check_exhaustive_limit(n, limit)
    return (
        Permutation._trusted(values)
        for values in permutations(range(1, n + 1))
        if pinnacle_set(values) == P
    )


def generate_naive(P, n, limit=None):
    """Sorted list of all permutations of [n] with pinnacle set ``P``."""
    return list(iter_naive(P, n, limit=limit))


def iter_fs_minimal(P, n):
    """Yield every FS-minimal permutation of [n] with pinnacle set ``P``."""
    P = as_value_set(P)
    for V in vale_sets(P, n):
        for arrangement in canonical_arrangements(P, V):
            yield from iter_fs_minimal_from_arrangement(arrangement, n)


def iter_constructive(P, n):
    """
    Yield the permutations of [n] with pinnacle set ``P`` orbit by orbit.

    Runs through the admissible vale sets, their canonical arrangements and the
    FS-minimal permutations built on each, then expands every FS-minimal
    permutation to its dual orbit. Orbits are disjoint, so nothing repeats.
    """
    for rep in iter_fs_minimal(P, n):
        yield from iter_orbit(rep)


def generate_constructive(P, n, check_disjoint=False):
    """
    Sorted list of all permutations of [n] with pinnacle set ``P``.

    Parameters
    ----------
    P: collection of int
        Pinnacle set. Inadmissible sets give an empty list.
    n: int
        Size of the permutations.
    check_disjoint: bool, optional, default=False
        If True, assert that no permutation is emitted twice.
    """
    result = list(iter_constructive(P, n))
    if check_disjoint:
        assert len(set(result)) == len(result), "Dual orbits overlap."
    logger.debug("Constructed %d permutations for P=%s, n=%d.", len(result), P, n)
    return sorted(result)


def pinnacle_partition(n, limit=None):
    """
    Group all of S_n by pinnacle set in a single scan.

    Returns
    -------
    dict
        Maps each pinnacle set (sorted tuple) to the lexicographically sorted
        list of permutations having it.
    """
    check_exhaustive_limit(n, limit)
    groups = defaultdict(list)
    for values in permutations(range(1, n + 1)):
        groups[pinnacle_set(values)].append(Permutation._trusted(values))
    return dict(groups)
