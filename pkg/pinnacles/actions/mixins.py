import logging
from collections import deque
from itertools import permutations

from pinnacles.permutation import Permutation, flank_bounds, rebuild, x_factorization

logger = logging.getLogger(__name__)


class FactorizationMixin:
    """
    Single-letter Foata-Strehl involution.

    Subclasses set ``greater``: False swaps the runs of smaller letters around
    ``x``, True the runs of greater letters.
    """

    greater = False

    def factorize(self, word, x):
        return x_factorization(word, x, greater=self.greater)

    def act(self, word, x):
        """Swap ``w2`` and ``w4`` of the x-factorization of ``word``."""
        word = tuple(word) if not isinstance(word, tuple) else word
        left, i, right = flank_bounds(word, x, greater=self.greater)
        if left == i and right == i + 1:
            return word
        return rebuild(
            word, word[:left] + word[i + 1 : right] + (x,) + word[left:i] + word[right:]
        )

    def moves(self, word, x):
        """Whether acting with ``x`` changes ``word``."""
        left, i, right = flank_bounds(word, x, greater=self.greater)
        return left < i or right > i + 1

    def free_letters(self, word):
        """Letters whose involution does not fix ``word``, sorted ascending."""
        return sorted(x for x in word if self.moves(word, x))


class SetActionMixin:
    """The Z_2^n action generated by the commuting involutions ``act``."""

    def act_set(self, word, letters):
        """
        Compose ``act`` over ``letters``.

        Letters are applied in ascending order. As the involutions commute, the
        order does not change the result.
        """
        for x in sorted(set(letters)):
            word = self.act(word, x)
        return word

    def orbit_size(self, word):
        return 2 ** len(self.free_letters(word))

    def orbit(self, word):
        """The full orbit of ``word`` by breadth-first search, sorted."""
        seen = {tuple(word): word}
        queue = deque([word])
        while queue:
            current = queue.popleft()
            for x in self.free_letters(current):
                image = self.act(current, x)
                if tuple(image) not in seen:
                    seen[tuple(image)] = image
                    queue.append(image)
        return sorted(seen.values())

    def iter_orbit(self, rep):
        """
        Yield the orbit of ``rep`` in Gray-code order, each element once.

        Every step applies a single involution, flipping the lowest set bit of
        the step counter over the free letters of ``rep``.
        """
        free = self.free_letters(rep)
        current = rep
        yield current
        for step in range(1, 2 ** len(free)):
            bit = (step & -step).bit_length() - 1
            current = self.act(current, free[bit])
            yield current

    def orbit_expand(self, rep):
        """The orbit of ``rep`` via ``iter_orbit``, sorted."""
        return sorted(self.iter_orbit(rep))

    def orbit_partition(self, n):
        """
        All orbits of S_n, each sorted, ordered by their smallest element.

        Parameters
        ----------
        n: int
            Size of the symmetric group. Every permutation is visited.
        """
        seen = set()
        orbits = []
        for values in permutations(range(1, n + 1)):
            if values in seen:
                continue
            orbit = self.orbit_expand(Permutation._trusted(values))
            seen.update(orbit)
            orbits.append(orbit)

        logger.debug("S_%d splits into %d %s orbits.", n, len(orbits), self.name)
        return orbits
