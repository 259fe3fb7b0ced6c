"""Heights of PBW generators and the resulting dimension of the Nichols algebra.

A generator of degree d has finite height exactly when 2 <= ord chi(d, d) < oo,
and the height is then that order.  The dimension of a finite-dimensional
Nichols algebra is taken as the product of the heights over the positive
roots (each root occurs once).
"""

from dataclasses import dataclass
from math import prod

from .bicharacter import chi_eval
from .values import value_order


@dataclass(frozen=True)
class FiniteDim:
    value: int
    factors: tuple  # (root, height) pairs
    kind = "finite_dim"


@dataclass(frozen=True)
class InfiniteDim:
    witness: tuple
    kind = "infinite_dim"


def pbw_height(Q, d):
    """Height of a PBW generator of degree d, or None for infinite height."""
    order = value_order(chi_eval(Q, d, d))
    if order is None or order < 2:
        return None
    return order


def nichols_dimension(Q, R):
    factors = []
    for root in sorted(R.positive):
        h = pbw_height(Q, root)
        if h is None:
            return InfiniteDim(root)
        factors.append((root, h))
    return FiniteDim(prod(h for _, h in factors), tuple(factors))
