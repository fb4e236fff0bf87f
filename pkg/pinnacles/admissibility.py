import logging
from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from pinnacles.permutation import Permutation
from pinnacles.utils import as_value_set, binom

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmissiblePair:
    """A pinnacle set and a vale set realized together by some permutation of [n]."""

    P: tuple
    V: tuple
    n: int

    def __post_init__(self):
        if not is_admissible_pair(self.P, self.V, self.n):
            raise ValueError(
                f"P={self.P} and V={self.V} are not an admissible pair for n={self.n}."
            )
        object.__setattr__(self, "P", as_value_set(self.P))
        object.__setattr__(self, "V", as_value_set(self.V))


@dataclass(frozen=True)
class GapDecomposition:
    """
    Gap sets of a pinnacle set ``p_1 < ... < p_l``.

    ``gaps[i - 1]`` holds the non-pinnacle values strictly between ``p_{i-1}``
    and ``p_i``, with ``p_0 = 1``.
    """

    gaps: tuple

    @property
    def sizes(self):
        return tuple(len(gap) for gap in self.gaps)


def npv(P, V, k):
    """Number of vales below ``k`` minus the number of pinnacles below ``k``."""
    return sum(v < k for v in V) - sum(p < k for p in P)


def is_admissible_pair(P, V, n):
    """
    Whether some permutation of [n] has pinnacle set ``P`` and vale set ``V``.

    Checks that both sets lie in [n] and are disjoint, that 1 is a vale, that
    ``|V| = |P| + 1`` and that every pinnacle has ``N_PV(p) >= 2``. Malformed
    input gives False.
    """
    try:
        P, V = as_value_set(P), as_value_set(V)
    except (TypeError, ValueError):
        return False

    if any(not 1 <= x <= n for x in P + V) or set(P) & set(V):
        return False
    if 1 not in V or len(V) != len(P) + 1:
        return False
    return all(npv(P, V, p) >= 2 for p in P)


def compositions_C(length):
    """
    Weak compositions ``(t_1, ..., t_l)`` of ``l`` with ``t_1 + ... + t_k >= k``.

    Sorted lexicographically. ``compositions_C(0) == [()]``. There are
    Catalan(l) of them.
    """
    if length < 0:
        raise ValueError(f"length should be non-negative. Got {length}.")

    def extend(prefix, total):
        k = len(prefix)
        if k == length:
            if total == length:
                yield tuple(prefix)
            return
        for part in range(max(0, k + 1 - total), length - total + 1):
            yield from extend(prefix + [part], total + part)

    return list(extend([], 0))


def catalan(length):
    return binom(2 * length, length) // (length + 1)


def gap_sets(P, n):
    """
    Gap sets ``G_i = {j in [n] \\ P : p_{i-1} < j < p_i}`` with ``p_0 = 1``.

    Parameters
    ----------
    P: collection of int
        Pinnacle set.
    n: int
        Size of the ambient permutations.

    Returns
    -------
    GapDecomposition
    """
    P = as_value_set(P)
    gaps = []
    for lower, upper in zip((1,) + P, P):
        gaps.append(tuple(j for j in range(lower + 1, min(upper, n + 1))))
    return GapDecomposition(tuple(gaps))


def _in_range(P, n):
    return all(1 <= p <= n for p in P)


def vale_sets(P, n):
    """
    All vale sets V such that (P, V) is admissible in S_n.

    For each ``t`` in ``C(|P|)`` and each choice of ``t_i`` values from the
    ``i``-th gap set, emits ``{1}`` together with the chosen values.

    Returns
    -------
    list of tuple
        Sorted vale sets, sorted lexicographically. Empty if and only if ``P``
        is not an admissible pinnacle set for ``n``.
    """
    P = as_value_set(P)
    if not _in_range(P, n):
        return []

    gaps = gap_sets(P, n).gaps
    result = []
    for t in compositions_C(len(P)):
        choices = [combinations(gap, size) for gap, size in zip(gaps, t)]
        for chosen in product(*choices):
            result.append(tuple(sorted((1,) + sum(chosen, ()))))

    logger.debug("P=%s, n=%d has %d admissible vale sets.", P, n, len(result))
    return sorted(result)


def count_vale_sets(P, n):
    """Number of admissible vale sets, summing products of binomials over C(|P|)."""
    P = as_value_set(P)
    if not _in_range(P, n):
        return 0
    sizes = gap_sets(P, n).sizes
    return sum(
        prod(binom(g, t) for g, t in zip(sizes, parts))
        for parts in compositions_C(len(P))
    )


def is_admissible_pinnacle_set(P, n, fast=False):
    """
    Whether some permutation of [n] has pinnacle set ``P``.

    Parameters
    ----------
    P: collection of int
        Candidate pinnacle set.
    n: int
        Size of the ambient permutations.
    fast: bool, optional, default=False
        If True, use the closed criterion ``p_i > 2i`` for the sorted pinnacles.
        Otherwise, decide by constructing the admissible vale sets.
    """
    try:
        P = as_value_set(P)
    except ValueError:
        return False
    if n < 1:
        return False
    if fast:
        return _in_range(P, n) and all(p > 2 * i for i, p in enumerate(P, start=1))
    return len(vale_sets(P, n)) > 0


def witness_permutation(P, V, n):
    """
    A permutation of [n] with pinnacle set ``P`` and vale set ``V``.

    Sorted vales and sorted pinnacles are interleaved as
    ``v_1 p_1 v_2 p_2 ... p_l v_{l+1}``. Each remaining value ``r`` joins, in
    ascending order, the ascending run right after the largest vale below it.
    """
    if not is_admissible_pair(P, V, n):
        raise ValueError(f"P={P} and V={V} are not an admissible pair for n={n}.")
    P, V = as_value_set(P), as_value_set(V)

    runs = {v: [] for v in V}
    used = set(P) | set(V)
    for r in range(1, n + 1):
        if r not in used:
            runs[max(v for v in V if v < r)].append(r)

    values = []
    for i, v in enumerate(V):
        values.append(v)
        values.extend(runs[v])
        if i < len(P):
            values.append(P[i])
    return Permutation(values)


def composition_to_dyck(t):
    """
    Dyck word of a composition in C(l): ``t_i`` up-steps then a right-step each.
    """
    t = tuple(t)
    total = 0
    for k, part in enumerate(t, start=1):
        if part < 0:
            raise ValueError(f"{t} has a negative part.")
        total += part
        if total < k:
            raise ValueError(f"{t} is not in C({len(t)}): prefix sum below {k}.")
    if total != len(t):
        raise ValueError(f"{t} does not sum to {len(t)}.")

    return "".join("U" * part + "R" for part in t)
