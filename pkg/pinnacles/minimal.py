import logging
from collections import Counter
from itertools import permutations

from pinnacles.actions import DUAL
from pinnacles.config import check_exhaustive_limit
from pinnacles.permutation import (
    INFINITY,
    pinnacle_set,
    restrict,
    vale_set,
    x_factorization,
)

logger = logging.getLogger(__name__)


def _skeleton(p):
    """Restriction of ``p`` to its pinnacles and vales."""
    return restrict(p, pinnacle_set(p) + vale_set(p))


def _is_canonical_at(skeleton, q):
    left, right = x_factorization(skeleton, q).maxima()
    return left < right


def _descending_letters(p):
    padded = (INFINITY, *p)
    return [b for a, b, c in zip(padded, padded[1:], padded[2:]) if a > b > c]


def is_fs_minimal(p):
    """
    Whether ``p`` is the canonical representative of its dual orbit.

    That is, ``p`` has no double descent, where the letter before ``p`` counts
    as infinite, and for each pinnacle ``q`` the q-factorization
    ``w1 w2 q w4 w5`` of the restriction of ``p`` to its pinnacles and vales has
    ``max(w2) < max(w4)``.
    """
    if _descending_letters(p):
        return False
    skeleton = _skeleton(p)
    return all(_is_canonical_at(skeleton, q) for q in pinnacle_set(p))


def to_fs_minimal(p):
    """
    The unique FS-minimal permutation in the dual orbit of ``p``.

    First moves every letter sitting strictly inside a descending run (one at a
    time, recomputing the run after each move) onto the following ascending run,
    which leaves exactly one descent per pinnacle. Then flips every pinnacle
    whose restricted factorization has ``max(w2) > max(w4)``.
    """
    while True:
        descending = _descending_letters(p)
        if not descending:
            break
        p = DUAL.act(p, descending[0])

    skeleton = _skeleton(p)
    flips = [q for q in pinnacle_set(p) if not _is_canonical_at(skeleton, q)]
    return DUAL.act_set(p, flips)


def fs_minimal_count_all(n, limit=None):
    """
    Count FS-minimal permutations of S_n per pinnacle set by exhaustive scan.

    Parameters
    ----------
    n: int
        Size of the symmetric group.
    limit: int, optional, default=None
        Largest n allowed. Defaults to ``pinnacles.config.max_naive_n()``.

    Returns
    -------
    dict
        Maps each admissible pinnacle set (sorted tuple) to the number of
        FS-minimal permutations, that is, of dual orbits, with that pinnacle set.
    """
    check_exhaustive_limit(n, limit)
    counts = Counter(
        pinnacle_set(values)
        for values in permutations(range(1, n + 1))
        if is_fs_minimal(values)
    )
    logger.debug("Found %d FS-minimal permutations in S_%d.", sum(counts.values()), n)
    return dict(counts)
