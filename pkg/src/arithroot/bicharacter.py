"""Braiding matrices of diagonal type and the bicharacter they define on Z^n."""

from dataclasses import dataclass
from math import gcd

from .values import GroupValue, StructureError, value_order


@dataclass(frozen=True)
class BraidingMatrix:
    """Structure constants ``q_ij``; entry ``(i, j)`` is chi(eps_i, eps_j)."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise StructureError("braiding matrix must be square and non-empty")
        shapes = {v.shape for row in rows for v in row}
        if len(shapes) != 1:
            raise StructureError(f"entries live in different value groups: {sorted(shapes)}")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self):
        return len(self.entries)

    @property
    def shape(self):
        return self.entries[0][0].shape

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def one(self):
        F, N = self.shape
        return GroupValue.one(F, N)

    def lift(self, F, N):
        return BraidingMatrix(tuple(tuple(v.lift(F, N) for v in row) for row in self.entries))

    @classmethod
    def rank2(cls, q11, q12, q21, q22):
        return cls(((q11, q12), (q21, q22)))


def chi_eval(Q, d, e):
    """chi(d, e) = prod_{i,j} q_ij^(d_i e_j)."""
    n = Q.n
    if len(d) != n or len(e) != n:
        raise StructureError(f"degree length mismatch for rank {n}: {len(d)}, {len(e)}")
    result = Q.one()
    for i, di in enumerate(d):
        if not di:
            continue
        for j, ej in enumerate(e):
            if ej:
                result = result * Q[i, j] ** (di * ej)
    return result


def cartan_integer(qii, prod):
    """Smallest m >= 0 with qii^m * prod == 1, or with qii^(m+1) == 1 != qii.

    ``prod`` is the symmetrized product q_ij q_ji.  Returns None when neither
    condition has a solution; this is decided exactly, not by search.
    """
    candidates = []

    # qii^m * prod = 1: free parts give linear equations, torsion a congruence
    m_fixed = None
    consistent = True
    for a, b in zip(qii.free, prod.free):
        if a == 0:
            if b != 0:
                consistent = False
                break
            continue
        if (-b) % a:
            consistent = False
            break
        m = -b // a
        if m < 0 or (m_fixed is not None and m != m_fixed):
            consistent = False
            break
        m_fixed = m
    if consistent:
        N = qii.N
        if m_fixed is not None:
            if (m_fixed * qii.tors + prod.tors) % N == 0:
                candidates.append(m_fixed)
        else:
            m = _solve_congruence(qii.tors, -prod.tors, N)
            if m is not None:
                candidates.append(m)

    d = value_order(qii)
    if d is not None and d >= 2:
        candidates.append(d - 1)

    return min(candidates) if candidates else None


def _solve_congruence(a, b, N):
    """Least x >= 0 with a*x = b (mod N), or None."""
    a, b = a % N, b % N
    g = gcd(a, N)
    if b % g:
        return None
    n = N // g
    if n == 1:
        return 0
    return (b // g) * pow(a // g, -1, n) % n


def cartan_entry(Q, E, i, j):
    """The integer m_ij of the basis E, or None when undefined."""
    if i == j:
        raise ValueError("cartan_entry needs i != j")
    ei, ej = E[i], E[j]
    qii = chi_eval(Q, ei, ei)
    prod = chi_eval(Q, ei, ej) * chi_eval(Q, ej, ei)
    return cartan_integer(qii, prod)


def matrix_at_basis(Q, E):
    """Structure constants chi(e_i, e_j) with respect to the ordered basis E."""
    return BraidingMatrix(tuple(tuple(chi_eval(Q, a, b) for b in E) for a in E))


@dataclass(frozen=True)
class TwistClass:
    """Diagonal entries plus symmetrized products ``q_ij q_ji`` for i < j."""

    diagonal: tuple
    products: tuple

    @property
    def rank(self):
        return len(self.diagonal)


def twist_class(Q):
    n = Q.n
    diag = tuple(Q[i, i] for i in range(n))
    prods = tuple(Q[i, j] * Q[j, i] for i in range(n) for j in range(i + 1, n))
    return TwistClass(diag, prods)


def twist_equivalent(Q1, Q2):
    if Q1.n != Q2.n:
        raise StructureError(f"rank mismatch: {Q1.n} vs {Q2.n}")
    if Q1.shape != Q2.shape:
        raise StructureError(f"value group mismatch: {Q1.shape} vs {Q2.shape}")
    return twist_class(Q1) == twist_class(Q2)
