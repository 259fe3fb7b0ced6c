"""Weyl-Brandt groupoid of a bicharacter: reflections, closure and roots.

Ordered bases are tuples of integer vectors (coordinates in the standard
basis).  The groupoid is stored through its objects (the reachable bases)
and the i-labelled reflection edges between them; the automorphism attached
to a morphism is recovered from the path.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .bicharacter import cartan_integer, chi_eval, matrix_at_basis

DEFAULT_CAP = 100_000


class InvariantError(AssertionError):
    """An arithmetic root system violated one of its structural properties."""


def standard_basis(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def as_basis(vectors):
    return tuple(tuple(int(x) for x in v) for v in vectors)


def basis_matrix(E):
    """Column matrix (rows of the result are coordinates) of an ordered basis."""
    n = len(E)
    return [[E[j][i] for j in range(n)] for i in range(n)]


def _inverse(A):
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def determinant(A):
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return int(det)


def is_z_basis(E):
    return abs(determinant(basis_matrix(E))) == 1


def coordinates(E, v):
    """Coordinates of the vector v with respect to the basis E."""
    inv = _inverse(basis_matrix(E))
    coords = [sum(inv[i][k] * v[k] for k in range(len(v))) for i in range(len(v))]
    if any(c.denominator != 1 for c in coords):
        raise ValueError(f"{v} has non-integral coordinates in {E}")
    return tuple(int(c) for c in coords)


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def matrix_rank(A):
    M = [[Fraction(x) for x in row] for row in A]
    rank, rows, cols = 0, len(M), len(M[0])
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(rows):
            if r != rank and M[r][col] != 0:
                f = M[r][col] / M[rank][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class ReflectionMap:
    """The pseudo-reflection s_{i,E}, as an integer matrix in standard coordinates."""

    matrix: tuple
    pivot: int
    cartan: tuple  # m_ij for j != i; entry i is 0


def cartan_row(Q, E, i):
    """(m_ij)_j for the basis E, or None if some m_ij is undefined."""
    n = len(E)
    ei = E[i]
    qii = chi_eval(Q, ei, ei)
    row = []
    for j in range(n):
        if j == i:
            row.append(0)
            continue
        prod = chi_eval(Q, ei, E[j]) * chi_eval(Q, E[j], ei)
        m = cartan_integer(qii, prod)
        if m is None:
            return None
        row.append(m)
    return tuple(row)


def reflect(Q, E, i):
    """Apply s_{i,E}.  Returns ``(ReflectionMap, image basis)`` or None if undefined."""
    ms = cartan_row(Q, E, i)
    if ms is None:
        return None
    ei = E[i]
    image = []
    for j, ej in enumerate(E):
        if j == i:
            image.append(tuple(-x for x in ei))
        else:
            image.append(tuple(a + ms[j] * b for a, b in zip(ej, ei)))
    image = tuple(image)
    T = _matmul(basis_matrix(image), _inverse(basis_matrix(E)))
    T = tuple(tuple(int(x) for x in row) for row in T)
    return ReflectionMap(T, i, ms), image


@dataclass(frozen=True)
class WeylGroupoid:
    nodes: tuple
    edges: tuple  # (basis, i, image basis)
    origin: tuple
    braiding: object

    @property
    def rank(self):
        return len(self.origin)


@dataclass(frozen=True)
class ArithmeticRootSystem:
    roots: frozenset
    positive: frozenset
    braiding: object
    base: tuple


@dataclass(frozen=True)
class Finite:
    groupoid: WeylGroupoid
    roots: ArithmeticRootSystem
    kind = "finite"
    exit_code = 0


@dataclass(frozen=True)
class NotArithmetic:
    basis: tuple
    index: int
    visited: int
    kind = "not_arithmetic"
    exit_code = 2


@dataclass(frozen=True)
class CapExceeded:
    visited: int
    kind = "cap_exceeded"
    exit_code = 3


@dataclass(frozen=True)
class CertifiedInfinite:
    witness: object
    kind = "certified_infinite"
    exit_code = 4


def generate(Q, E0=None, cap=DEFAULT_CAP, certify=True):
    """Breadth-first closure of E0 under all pseudo-reflections.

    For rank 2 an infinite groupoid is recognised up front from the
    periodicity of the reflected structure constants (see
    ``rank2.certify_infinite``); this only short-circuits a search that
    would otherwise end in ``CapExceeded``.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    n = Q.n
    E0 = standard_basis(n) if E0 is None else as_basis(E0)
    if not is_z_basis(E0):
        raise ValueError(f"{E0} is not a basis of Z^{n}")

    if certify and n == 2 and E0 == standard_basis(2):
        from .rank2 import certify_infinite

        witness = certify_infinite(Q)
        if witness is not None:
            return CertifiedInfinite(witness)

    seen = {E0: 0}
    order = [E0]
    edges = []
    queue = deque([E0])
    while queue:
        E = queue.popleft()
        for i in range(n):
            res = reflect(Q, E, i)
            if res is None:
                return NotArithmetic(E, i, len(order))
            _, image = res
            edges.append((E, i, image))
            if image not in seen:
                if len(order) >= cap:
                    return CapExceeded(len(order) + 1)
                seen[image] = len(order)
                order.append(image)
                queue.append(image)
    W = WeylGroupoid(tuple(order), tuple(edges), E0, Q)
    return Finite(W, roots_of(W))


def roots_of(W):
    """Union of all reachable bases, split into positive and negative roots."""
    roots = set()
    for E in W.nodes:
        roots.update(E)
    positive = set()
    for r in roots:
        c = coordinates(W.origin, r)
        if all(x >= 0 for x in c):
            positive.add(r)
        elif not all(x <= 0 for x in c):
            raise InvariantError(f"root {r} has mixed-sign coordinates {c}")
    R = ArithmeticRootSystem(frozenset(roots), frozenset(positive), W.braiding, W.origin)
    positive_split(R)
    return R


def positive_split(R):
    """``(positive, negative)`` roots; checks that the split is exact."""
    pos = set(R.positive)
    neg = set(R.roots) - pos
    if {tuple(-x for x in r) for r in pos} != neg:
        raise InvariantError("negative roots are not the negatives of the positive ones")
    if len(R.roots) != 2 * len(pos):
        raise InvariantError("roots are not a disjoint union of positive and negative parts")
    return frozenset(pos), frozenset(neg)


def proportional_pairs(roots):
    """Pairs of distinct roots a, b with b = lambda * a for lambda != -1."""
    bad = []
    rs = sorted(roots)
    for x, a in enumerate(rs):
        for b in rs[x + 1:]:
            if _proportional(a, b) and any(u != -v for u, v in zip(a, b)):
                bad.append((a, b))
    return bad


def _proportional(a, b):
    n = len(a)
    return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))


def groupoid_basis_set(outcome):
    return frozenset(outcome.groupoid.nodes)


def reflected_braidings(W):
    """Structure constants at every node of a finite groupoid, in node order."""
    return [matrix_at_basis(W.braiding, E) for E in W.nodes]
