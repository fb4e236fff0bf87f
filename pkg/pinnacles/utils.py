import operator

from scipy.special import comb


def binom(a, b):
    """Exact binomial coefficient, 0 when b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return int(comb(a, b, exact=True))


def as_value_set(values):
    """
    Normalize a collection of values to a sorted tuple of distinct ints.

    Raises
    ------
    ValueError
        If a value is not an integer or occurs twice.
    """
    try:
        values = [operator.index(v) for v in values]
    except TypeError:
        raise ValueError(f"Set elements should be integers. Got {values}.") from None
    if len(set(values)) != len(values):
        raise ValueError(f"Set {values} contains repeated values.")
    return tuple(sorted(values))


def parse_value_set(text):
    """
    Parse ``4,8,11`` into ``(4, 8, 11)``. ``""`` and ``none`` give ``()``.
    """
    text = text.strip()
    if text == "" or text.lower() == "none":
        return ()
    try:
        return as_value_set(int(part) for part in text.split(","))
    except ValueError as error:
        raise ValueError(f"Cannot parse {text!r} as a set of values: {error}")


def format_value_set(values, sep=","):
    return sep.join(str(v) for v in sorted(values))
