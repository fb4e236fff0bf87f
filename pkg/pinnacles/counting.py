import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import factorial, prod

from pinnacles.admissibility import is_admissible_pair, npv, vale_sets
from pinnacles.permutation import Permutation, pinnacle_set, vale_set, x_factorization
from pinnacles.utils import as_value_set, binom

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class PVArrangement:
    """
    An alternating word ``v_1 p_1 v_2 p_2 ... p_l v_{l+1}`` on P and V.

    Vales sit at even positions, pinnacles at odd positions, both listed in
    order of appearance.
    """

    word: tuple

    @property
    def pinnacles(self):
        return tuple(sorted(self.word[1::2]))

    @property
    def vales(self):
        return tuple(sorted(self.word[0::2]))

    def is_arrangement(self):
        """Whether the word's pinnacles and vales are its odd and even letters."""
        return (
            len(self.word) % 2 == 1
            and pinnacle_set(self.word) == self.pinnacles
            and vale_set(self.word) == self.vales
        )

    def is_canonical(self):
        """Whether every pinnacle's factorization has ``max(w2) < max(w4)``."""
        if not self.is_arrangement():
            return False
        for p in self.word[1::2]:
            left, right = x_factorization(self.word, p).maxima()
            if left >= right:
                return False
        return True


def _arrangements(P, V):
    if not P:
        (v,) = V
        return [(v,)]

    smallest, rest = P[0], P[1:]
    below = [v for v in V if v < smallest]
    words = []
    for left, right in combinations(below, 2):
        reduced = tuple(sorted(set(V) - {left, right} | {smallest}))
        for word in _arrangements(rest, reduced):
            i = word.index(smallest)
            words.append(word[:i] + (left, smallest, right) + word[i + 1 :])
    return words


def canonical_arrangements(P, V):
    """
    All canonical PV-arrangements of an admissible pair.

    Built recursively: pick two vales below the smallest pinnacle ``p``, solve
    the pair where ``p`` has become a vale and those two are gone, then replace
    ``p`` by ``left p right``.

    Returns
    -------
    list of PVArrangement
        Sorted by word. There are ``prod(binom(N_PV(p), 2))`` of them.
    """
    P, V = as_value_set(P), as_value_set(V)
    if not is_admissible_pair(P, V, max(P + V, default=1)):
        raise ValueError(f"P={P} and V={V} are not an admissible pair.")
    return sorted(PVArrangement(word) for word in _arrangements(P, V))


def count_canonical(P, V):
    """Number of canonical PV-arrangements, ``prod(binom(N_PV(p), 2))``."""
    return prod(binom(npv(P, V, p), 2) for p in P)


def _slots(word):
    """(vale, next pinnacle or None) for each vale of the word, left to right."""
    vales = word[0::2]
    pinnacles = word[1::2] + (None,)
    return list(zip(vales, pinnacles))


def iter_fs_minimal_from_arrangement(arrangement, n):
    """
    Yield the FS-minimal permutations restricting to a canonical arrangement.

    Each value ``r`` outside the arrangement goes into the ascending run between
    a vale ``v`` and the following pinnacle ``p`` with ``v < r < p`` (the last
    vale is followed by no pinnacle). Values are dealt in ascending order and the
    choices are iterated odometer-style, leftmost slot first.
    """
    if not isinstance(arrangement, PVArrangement):
        arrangement = PVArrangement(tuple(arrangement))
    if not arrangement.is_canonical():
        raise ValueError(f"{arrangement.word} is not a canonical PV-arrangement.")
    word = arrangement.word
    if max(word) > n:
        raise ValueError(f"{arrangement.word} has values larger than n={n}.")

    slots = _slots(word)
    used = set(word)
    fillers = [r for r in range(1, n + 1) if r not in used]
    options = [
        [k for k, (v, p) in enumerate(slots) if v < r and (p is None or r < p)]
        for r in fillers
    ]

    for choice in product(*options):
        runs = [[] for _ in slots]
        for r, k in zip(fillers, choice):
            runs[k].append(r)

        values = []
        for (v, p), run in zip(slots, runs):
            values.append(v)
            values.extend(run)
            if p is not None:
                values.append(p)
        yield Permutation._trusted(values)


def fs_minimal_from_arrangement(arrangement, n):
    """List of ``iter_fs_minimal_from_arrangement``, in odometer order."""
    return list(iter_fs_minimal_from_arrangement(arrangement, n))


def count_O_PV(P, V, n):
    """FS-minimal permutations per canonical arrangement, ``prod(N_PV(r))``."""
    used = set(P) | set(V)
    return prod(npv(P, V, r) for r in range(1, n + 1) if r not in used)


def count_O_P(P, n):
    """
    Number of FS-minimal permutations, that is dual orbits, with pinnacle set P.

    Returns
    -------
    int
        ``sum over V of prod(binom(N_PV(p), 2)) * prod(N_PV(r))``. 0 if ``P`` is
        not admissible.
    """
    P = as_value_set(P)
    orbits = sum(count_canonical(P, V) * count_O_PV(P, V, n) for V in vale_sets(P, n))
    logger.debug("P=%s, n=%d has %d dual orbits.", P, n, orbits)
    return orbits


def count_pin(P, n):
    """Number of permutations of [n] with pinnacle set ``P``."""
    P = as_value_set(P)
    orbits = count_O_P(P, n)
    if orbits == 0:
        return 0
    return 2 ** (n - len(P) - 1) * orbits


@lru_cache(maxsize=None)
def stirling2(r, s):
    """
    Stirling partition number S(r, s): partitions of r objects into s blocks.

    Computed row by row from ``S(r, s) = s S(r - 1, s) + S(r - 1, s - 1)``.
    """
    if r < 0 or s < 0:
        raise ValueError(f"Stirling numbers need r, s >= 0. Got ({r}, {s}).")
    if s > r:
        return 0

    row = [1] + [0] * s
    for _ in range(r):
        row = [0] + [j * row[j] + row[j - 1] for j in range(1, s + 1)]
    return row[s]


def pin_bounds(P, n):
    """
    Lower and upper bounds on the number of permutations with pinnacle set P.

    Returns
    -------
    tuple of int
        ``2^(n - l - 1)`` and ``l! (l + 1)! 2^(n - 2l - 1) S(n - l, l + 1)``
        with ``l = |P|``. Both are attained.
    """
    P = as_value_set(P)
    if not vale_sets(P, n):
        raise ValueError(f"P={P} is not an admissible pinnacle set for n={n}.")
    size = len(P)
    lower = 2 ** (n - size - 1)
    upper = (
        factorial(size)
        * factorial(size + 1)
        * 2 ** (n - 2 * size - 1)
        * stirling2(n - size, size + 1)
    )
    return lower, upper
