"""Exact arithmetic in the value group Z^F x Z/N.

A value stands for ``q_1^{a_1} ... q_F^{a_F} * z^t`` where the ``q_k`` are
independent generic parameters and ``z`` is a fixed primitive N-th root of
unity.  Only multiplicative structure is modelled; this is enough for every
predicate that comes up (orders, equalities, "is -1", "is primitive n-th
root").
"""

from dataclasses import dataclass
from math import gcd


class StructureError(ValueError):
    """Raised when values from different groups (F, N) are combined."""


@dataclass(frozen=True, order=True)
class GroupValue:
    free: tuple
    tors: int
    N: int = 1

    def __post_init__(self):
        if self.N < 1:
            raise StructureError(f"torsion order must be >= 1, got {self.N}")
        object.__setattr__(self, "free", tuple(int(x) for x in self.free))
        object.__setattr__(self, "tors", int(self.tors) % self.N)

    @property
    def F(self):
        return len(self.free)

    @property
    def shape(self):
        return (self.F, self.N)

    @classmethod
    def one(cls, F=0, N=1):
        return cls((0,) * F, 0, N)

    @classmethod
    def minus_one(cls, F=0, N=2):
        if N % 2:
            raise StructureError(f"-1 is not representable with odd N={N}")
        return cls((0,) * F, N // 2, N)

    @classmethod
    def root(cls, k, F=0, N=1):
        """The value z^k."""
        return cls((0,) * F, k, N)

    @classmethod
    def param(cls, index, F, N=1, power=1):
        free = [0] * F
        free[index] = power
        return cls(tuple(free), 0, N)

    def _check(self, other):
        if not isinstance(other, GroupValue):
            raise TypeError(f"cannot combine GroupValue with {type(other).__name__}")
        if self.shape != other.shape:
            raise StructureError(f"mismatched value groups {self.shape} vs {other.shape}")

    def __mul__(self, other):
        self._check(other)
        free = tuple(a + b for a, b in zip(self.free, other.free))
        return GroupValue(free, self.tors + other.tors, self.N)

    def __truediv__(self, other):
        return self * other.inv()

    def inv(self):
        return GroupValue(tuple(-a for a in self.free), -self.tors, self.N)

    def __pow__(self, k):
        k = int(k)
        return GroupValue(tuple(k * a for a in self.free), k * self.tors, self.N)

    def __neg__(self):
        # multiplication by -1
        return self * GroupValue.minus_one(self.F, self.N)

    @property
    def is_one(self):
        return self.tors == 0 and not any(self.free)

    @property
    def is_minus_one(self):
        return self.N % 2 == 0 and self.tors == self.N // 2 and not any(self.free)

    def order(self):
        """Multiplicative order, or None when infinite."""
        return value_order(self)

    def lift(self, F, N):
        """Embed into Z^F x Z/N (F >= self.F, self.N | N); new parameters get exponent 0."""
        if N % self.N or F < self.F:
            raise StructureError(f"cannot embed {self.shape} into {(F, N)}")
        return GroupValue(self.free + (0,) * (F - self.F), self.tors * (N // self.N), N)

    def __repr__(self):
        return f"GroupValue(free={list(self.free)}, tors={self.tors}, N={self.N})"


def value_arith(a, b=None, op="mul", k=None):
    """Dispatcher for the group operations: ``mul``, ``inv`` and ``pow``."""
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        return a ** k
    raise ValueError(f"unknown operation {op!r}")


def value_order(a):
    """Order of ``a``; ``None`` stands for infinite order."""
    if any(a.free):
        return None
    return a.N // gcd(a.N, a.tors)


def is_primitive_root(a, n):
    return value_order(a) == n


def primitive_roots(n, F=0, N=1):
    """All primitive n-th roots of unity in Z^F x Z/N (empty unless n | N)."""
    if N % n:
        return []
    step = N // n
    return [GroupValue.root(step * t, F, N) for t in range(n) if gcd(t, n) == 1]
