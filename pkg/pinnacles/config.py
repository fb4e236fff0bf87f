import logging
import os

logger = logging.getLogger(__name__)

MAX_NAIVE_N_ENV = "PINNACLE_MAX_NAIVE_N"
DEFAULT_MAX_NAIVE_N = 10


class ExhaustiveLimitError(RuntimeError):
    """Raised when an exhaustive scan of S_n is requested above the limit."""


def max_naive_n():
    """
    Largest n for which exhaustive scans over S_n are allowed.

    Read from the environment variable ``PINNACLE_MAX_NAIVE_N`` on every call,
    falling back to 10.
    """
    value = os.environ.get(MAX_NAIVE_N_ENV)
    if value is None or value.strip() == "":
        return DEFAULT_MAX_NAIVE_N
    try:
        return int(value)
    except ValueError:
        raise ValueError(
            f"{MAX_NAIVE_N_ENV} should be an integer. Got {value!r}."
        ) from None


def check_exhaustive_limit(n, limit=None):
    """
    Raise if scanning all of S_n exceeds the configured limit.

    Parameters
    ----------
    n: int
        Size of the symmetric group to scan.
    limit: int, optional, default=None
        Explicit limit. If None, uses ``max_naive_n()``.
    """
    limit = max_naive_n() if limit is None else limit
    if n > limit:
        raise ExhaustiveLimitError(
            f"Exhaustive enumeration of S_{n} exceeds the limit n <= {limit}. "
            f"Raise it via {MAX_NAIVE_N_ENV}."
        )
    logger.debug("Exhaustive scan of S_%d allowed (limit %d).", n, limit)
