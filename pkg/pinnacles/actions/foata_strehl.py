from pinnacles.actions.mixins import FactorizationMixin, SetActionMixin
from pinnacles.permutation import w0_conjugate


class DualFoataStrehlAction(FactorizationMixin, SetActionMixin):
    """
    Dual Foata-Strehl action.

    ``act(p, x)`` swaps the maximal runs of letters smaller than ``x`` on either
    side of ``x``. Vales are exactly the fixed letters, so orbits have
    ``2 ** (n - v(p))`` elements and every element shares the pinnacle set of
    ``p``.
    """

    greater = False
    name = "dual Foata-Strehl"

    def __repr__(self):
        return "DualFoataStrehlAction()"


class ClassicalFoataStrehlAction(FactorizationMixin, SetActionMixin):
    """
    Classical Foata-Strehl action, swapping the runs of letters greater than x.

    Conjugate to the dual action through ``w0``:
    ``dual.act(p, x) == w0(classical.act(w0(p), n - x + 1))``.
    """

    greater = True
    name = "classical Foata-Strehl"

    def __repr__(self):
        return "ClassicalFoataStrehlAction()"

    def conjugate(self, p, x):
        """The dual action at ``x`` computed through the classical one."""
        return w0_conjugate(self.act(w0_conjugate(p), len(p) - x + 1))


DUAL = DualFoataStrehlAction()
CLASSICAL = ClassicalFoataStrehlAction()


def dual_fs(p, x):
    return DUAL.act(p, x)


def classical_fs(p, x):
    return CLASSICAL.act(p, x)


def dual_fs_set(p, letters):
    return DUAL.act_set(p, letters)


def classical_fs_set(p, letters):
    return CLASSICAL.act_set(p, letters)


def dual_orbit(p):
    return DUAL.orbit(p)


def classical_orbit(p):
    return CLASSICAL.orbit(p)


def orbit_expand(rep):
    return DUAL.orbit_expand(rep)


def iter_orbit(rep):
    return DUAL.iter_orbit(rep)


def orbit_size(p):
    return DUAL.orbit_size(p)


def orbit_partition(n):
    return DUAL.orbit_partition(n)
