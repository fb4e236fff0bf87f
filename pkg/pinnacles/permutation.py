import operator
from dataclasses import dataclass

INFINITY = float("inf")


class Permutation(tuple):
    """
    A permutation of [n] in one-line notation.

    Values are 1-based. Comparisons at positions 0 and n + 1 treat the missing
    neighbours as infinite, so the first (last) letter is a vale whenever it is
    smaller than its only neighbour. Permutations are tuples: they hash, compare
    lexicographically and equal the plain tuple of their values.

    Parameters
    ----------
    values: iterable of int
        A rearrangement of 1, ..., n with n >= 1.
    """

    def __new__(cls, values):
        try:
            values = tuple(operator.index(v) for v in values)
        except TypeError:
            raise ValueError(f"Permutation values should be integers. Got {values}.")

        if len(values) == 0:
            raise ValueError("A permutation needs at least one value.")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(
                f"Values {values} are not a rearrangement of 1, ..., {len(values)}."
            )
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values):
        # Skips validation. Only for values produced by the action or generators.
        return tuple.__new__(cls, values)

    @classmethod
    def identity(cls, n):
        return cls._trusted(range(1, n + 1))

    @classmethod
    def from_string(cls, text):
        """
        Parse ``1,5,2,6,4,3,8,7`` or, for n <= 9, the compact form ``15264387``.
        """
        text = text.strip()
        if "," in text:
            parts = [part.strip() for part in text.split(",")]
        elif text.isdigit() and len(text) <= 9:
            parts = list(text)
        else:
            raise ValueError(f"Cannot parse {text!r} as a permutation.")

        try:
            return cls(int(part) for part in parts)
        except ValueError as error:
            raise ValueError(f"Cannot parse {text!r} as a permutation: {error}")

    @property
    def n(self):
        return len(self)

    def __str__(self):
        return ",".join(str(v) for v in self)

    def __repr__(self):
        return f"Permutation({str(self)})"


def rebuild(word, values):
    """Return values as a Permutation if word is one, else as a tuple."""
    if isinstance(word, Permutation):
        return Permutation._trusted(values)
    return tuple(values)


def _triples(word):
    padded = (INFINITY, *word, INFINITY)
    return zip(padded, padded[1:], padded[2:])


def peak_set(word):
    """Positions i (1-based) with word[i - 1] < word[i] > word[i + 1]."""
    return tuple(i for i, (a, b, c) in enumerate(_triples(word), start=1) if a < b > c)


def pinnacle_set(word):
    """Values at the peaks, sorted ascending."""
    return tuple(sorted(b for a, b, c in _triples(word) if a < b > c))


def valley_set(word):
    """Positions i (1-based) with word[i - 1] > word[i] < word[i + 1]."""
    return tuple(i for i, (a, b, c) in enumerate(_triples(word), start=1) if a > b < c)


def vale_set(word):
    """Values at the valleys, sorted ascending."""
    return tuple(sorted(b for a, b, c in _triples(word) if a > b < c))


def descent_count(word):
    """Number of interior descents. The infinite sentinels do not count here."""
    return sum(a > b for a, b in zip(word, word[1:]))


def has_double_descent(word):
    return any(a > b > c for a, b, c in zip(word, word[1:], word[2:]))


@dataclass(frozen=True)
class XFactorization:
    """
    The split ``w1 w2 x w4 w5`` of a word around the letter ``x``.

    ``w2`` and ``w4`` are the maximal runs immediately left and right of ``x``
    whose letters are smaller than ``x`` (greater than ``x`` for the classical
    factorization).
    """

    w1: tuple
    w2: tuple
    x: int
    w4: tuple
    w5: tuple

    def word(self):
        return (*self.w1, *self.w2, self.x, *self.w4, *self.w5)

    def swapped(self):
        return (*self.w1, *self.w4, self.x, *self.w2, *self.w5)

    def maxima(self):
        """(max(w2), max(w4)), where the maximum of an empty word is 0."""
        return max(self.w2, default=0), max(self.w4, default=0)


def flank_bounds(word, x, greater=False):
    """
    Positions ``(left, i, right)`` with ``word[i] == x``, ``w2 == word[left:i]``
    and ``w4 == word[i + 1 : right]``.
    """
    try:
        i = word.index(x)
    except ValueError:
        raise ValueError(f"{x} is not a letter of {tuple(word)}.") from None

    in_flank = operator.gt if greater else operator.lt

    left = i
    while left > 0 and in_flank(word[left - 1], x):
        left -= 1
    right = i + 1
    while right < len(word) and in_flank(word[right], x):
        right += 1
    return left, i, right


def x_factorization(word, x, greater=False):
    """
    Factorize ``word`` around the letter ``x``.

    Parameters
    ----------
    word: sequence of distinct int
        A permutation or any subword of one.
    x: int
        The pivot letter. Must occur in ``word``.
    greater: bool, optional, default=False
        If True, the flanks collect letters greater than ``x`` (classical
        Foata-Strehl factorization) instead of smaller ones.

    Returns
    -------
    XFactorization
    """
    word = tuple(word)
    left, i, right = flank_bounds(word, x, greater=greater)
    return XFactorization(
        word[:left], word[left:i], x, word[i + 1 : right], word[right:]
    )


def restrict(word, letters):
    """Subsequence of ``word`` keeping exactly ``letters``, in order of appearance."""
    letters = set(letters)
    return tuple(v for v in word if v in letters)


def w0_conjugate(p):
    """Replace each value v by n - v + 1."""
    n = len(p)
    return rebuild(p, (n + 1 - v for v in p))
