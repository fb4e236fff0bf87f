import numpy as np

from pinnacles.permutation import Permutation


def simulate(n, size=100, seed=0):
    """Draw ``size`` uniformly random permutations of [n]."""
    rng = np.random.RandomState(seed)
    return [Permutation(rng.permutation(n) + 1) for _ in range(size)]


def simulate_subsets(n, size=100, seed=0):
    """Draw ``size`` uniformly random subsets of [n] as sorted tuples."""
    rng = np.random.RandomState(seed)
    masks = rng.randint(0, 2, size=(size, n)).astype(bool)
    return [tuple(int(v) for v in np.flatnonzero(mask) + 1) for mask in masks]
