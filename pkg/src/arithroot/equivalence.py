"""Weyl equivalence of braiding matrices through their groupoids."""

from itertools import permutations
from math import lcm

from .bicharacter import matrix_at_basis, twist_class
from .groupoid import DEFAULT_CAP, generate


class NotFiniteError(ValueError):
    """Weyl equivalence was asked for a braiding without finite root system."""

    def __init__(self, outcome):
        super().__init__(f"groupoid is not finite: {outcome.kind}")
        self.outcome = outcome


def _finite(Q, cap):
    out = generate(Q, cap=cap)
    if out.kind != "finite":
        raise NotFiniteError(out)
    return out


def weyl_orbit(Q, cap=DEFAULT_CAP):
    """Twist classes of Q seen from every object of its groupoid, in every ordering."""
    W = _finite(Q, cap).groupoid
    orbit = set()
    for E in W.nodes:
        for perm in permutations(E):
            orbit.add(twist_class(matrix_at_basis(Q, perm)))
    return frozenset(orbit)


def common_group(Q1, Q2):
    """Lift both matrices into one value group (free parameters matched by position)."""
    (F1, N1), (F2, N2) = Q1.shape, Q2.shape
    F, N = max(F1, F2), lcm(N1, N2)
    return Q1.lift(F, N), Q2.lift(F, N)


def weyl_equivalent(Q1, Q2, cap=DEFAULT_CAP):
    if Q1.n != Q2.n:
        return False
    Q1, Q2 = common_group(Q1, Q2)
    _finite(Q1, cap)
    return twist_class(Q1) in weyl_orbit(Q2, cap)
