"""Rank-2 decision tools.

The two reflection chains E'_{l+1} = tau(s_1(E'_l)) (from E_0) and
E''_{l+1} = tau(s_1(E''_l)) (from tau(E_0)) visit every object of the
connected groupoid.  Along a chain only three constants matter: q11, the
symmetrized product q12*q21, and q22.  One chain step multiplies the basis
matrix on the right by [[m, -1], [1, 0]].
"""

from dataclasses import dataclass, field
from itertools import product

from .bicharacter import cartan_integer, matrix_at_basis, twist_class
from .figure1 import FIGURE1
from .notation import evaluate, parse_monomial
from .values import StructureError, primitive_roots, value_order


@dataclass(frozen=True)
class Mat2Z:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def step(cls, m):
        # reflection s_1 followed by the transposition tau, in local coordinates
        return cls(m, -1, 1, 0)

    def __matmul__(self, o):
        return Mat2Z(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __pow__(self, k):
        result = Mat2Z.identity()
        for _ in range(k):
            result = result @ self
        return result

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    def is_identity(self):
        return self == Mat2Z.identity()

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))


TAU = Mat2Z(0, 1, 1, 0)


def sl2_order_finite(A):
    """Whether an invertible integer 2x2 matrix has finite order.

    In SL(2, Z) finite order happens exactly for +-id and for trace in
    {-1, 0, 1}.  With det -1 the characteristic polynomial is x^2 - t x - 1,
    so the order is finite (and then 2) exactly when the trace t is 0.
    """
    if A.det not in (1, -1):
        raise ValueError(f"matrix {A.rows()} is not invertible over Z")
    if A.det == -1:
        return A.trace == 0
    if A == Mat2Z.identity() or A == Mat2Z(-1, 0, 0, -1):
        return True
    return A.trace in (-1, 0, 1)


def subslz_certificate(gens, M):
    """True iff every generator is [[a, -b], [c, -d]] with 0 < d < M*b < a and det 1.

    The semigroup generated by such matrices never contains the identity.
    """
    if not gens:
        return False
    for g in gens:
        a, b, d = g.a, -g.b, -g.d
        if g.det != 1 or not (0 < d < M * b < a):
            return False
    return True


@dataclass(frozen=True)
class ChainState:
    step: int
    m: int
    p: object
    q11: object
    prod: object
    q22: object
    cumulative: Mat2Z  # basis_l = basis_0 * cumulative
    basis: tuple


@dataclass(frozen=True)
class ChainResult:
    kind: str  # "periodic", "undefined", "not_periodic"
    states: tuple
    period: int = None
    undefined_at: int = None

    @property
    def periodic(self):
        return self.kind == "periodic"


class ChainDriftError(AssertionError):
    """Recursion-computed constants disagree with the directly evaluated ones."""


def chain_step(q11, prod, q22):
    """One step of the constant recursion.

    Returns ``(m, p, (q11', prod', q22'))`` or None when m is undefined.
    """
    m = cartan_integer(q11, prod)
    if m is None:
        return None
    if (q11 ** m * prod).is_one:
        p = q11 ** 0
    else:
        p = q11.inv() * prod
    return m, p, (p ** m * q22, p ** -2 * prod, q11)


def _start_basis(start):
    if start in ("E0", "prime", 0):
        return ((1, 0), (0, 1))
    if start in ("tau", "double", 1):
        return ((0, 1), (1, 0))
    raise ValueError(f"unknown chain start {start!r}")


def _constants(Q, E):
    M = matrix_at_basis(Q, E)
    return M[0, 0], M[0, 1] * M[1, 0], M[1, 1]


def rank2_chain(Q, start="E0", cap=1000):
    """Run one reflection chain until its basis repeats, m is undefined, or cap steps."""
    if Q.n != 2:
        raise ValueError("rank2_chain needs a rank-2 braiding")
    E = _start_basis(start)
    q11, prod, q22 = _constants(Q, E)
    cumulative = Mat2Z.identity()
    seen = {E: 0}
    states = []
    for l in range(cap):
        direct = _constants(Q, E)
        if direct != (q11, prod, q22):
            raise ChainDriftError(f"step {l}: recursion {(q11, prod, q22)} != direct {direct}")
        res = chain_step(q11, prod, q22)
        if res is None:
            return ChainResult("undefined", tuple(states), undefined_at=l)
        m, p, nxt = res
        states.append(ChainState(l, m, p, q11, prod, q22, cumulative, E))
        e1, e2 = E
        E = (tuple(b + m * a for a, b in zip(e1, e2)), tuple(-a for a in e1))
        cumulative = cumulative @ Mat2Z.step(m)
        q11, prod, q22 = nxt
        if E in seen:
            final = ChainState(l + 1, None, None, q11, prod, q22, cumulative, E)
            return ChainResult("periodic", tuple(states) + (final,), period=l + 1 - seen[E])
        seen[E] = l + 1
    return ChainResult("not_periodic", tuple(states))


@dataclass(frozen=True)
class InfinityWitness:
    """A constant cycle of one chain whose basis transition has infinite order."""

    chain: str
    offset: int
    period: int
    ms: tuple
    product: Mat2Z
    semigroup: tuple = field(default=())  # (M, generator) pairs passing subslz_certificate


def constant_cycle(Q, start, cap=10_000):
    """Find where the constants (q11, q12*q21, q22) of a chain start repeating.

    Returns ``(offset, ms)`` where ``ms`` is the m-sequence over one cycle,
    the string "undefined" if some m is undefined first, or None at cap.
    """
    q11, prod, q22 = _constants(Q, _start_basis(start))
    seen = {}
    ms = []
    for l in range(cap):
        key = (q11, prod, q22)
        if key in seen:
            j = seen[key]
            return j, tuple(ms[j:])
        seen[key] = l
        res = chain_step(q11, prod, q22)
        if res is None:
            return "undefined"
        m, _, (q11, prod, q22) = res
        ms.append(m)
    return None


def certify_infinite(Q, cap=10_000):
    """An ``InfinityWitness`` if the rank-2 groupoid is provably infinite, else None.

    Both chains must have every m defined (their constants cycle); then the
    chain bases over successive cycles are basis * C^k for the cycle product
    C, so the groupoid is infinite exactly when C has infinite order.
    """
    cycles = {}
    for start in ("E0", "tau"):
        res = constant_cycle(Q, start, cap)
        if res is None or res == "undefined":
            return None
        cycles[start] = res
    for start, (offset, ms) in cycles.items():
        C = Mat2Z.identity()
        for m in ms:
            C = C @ Mat2Z.step(m)
        if not sl2_order_finite(C):
            semigroup = tuple(
                (M, g) for g in (C, C @ C) for M in (1, 2) if subslz_certificate([g], M)
            )
            return InfinityWitness(start, offset, len(ms), ms, C, semigroup)
    return None


def lemma_no1_filter(Q):
    """Necessary condition for a finite rank-2 root system, evaluated multiplicatively."""
    if Q.n != 2:
        raise ValueError("lemma_no1_filter needs a rank-2 braiding")
    q11, q12, q21, q22 = Q[0, 0], Q[0, 1], Q[1, 0], Q[1, 1]
    prod = q12 * q21
    if (
        prod.is_one
        or (q11 * prod).is_one
        or (prod * q22).is_one
        or q11.is_minus_one
        or q22.is_minus_one
    ):
        return True
    if not (q11 * prod ** 2 * q22).is_minus_one:
        return False
    return (
        value_order(q11) in (3, 4)
        or (q11 ** 2 * prod).is_one
        or (q11 ** 3 * prod).is_one
    )


@dataclass(frozen=True)
class Figure1Match:
    row: int
    variant: int
    transposed: bool
    tree: str
    env: dict = field(compare=False, hash=False)


def figure1_classify(Q):
    """First Figure-1 row (lowest id) whose pattern matches the twist class of Q."""
    if Q.n != 2:
        raise ValueError("figure1_classify needs a rank-2 braiding")
    tc = twist_class(Q)
    q11, q22 = tc.diagonal
    (prod,) = tc.products
    for row in FIGURE1:
        for vi, var in enumerate(row.variants):
            for transposed, target in ((False, (q11, prod, q22)), (True, (q22, prod, q11))):
                env = _match_variant(row, var, target)
                if env is not None:
                    return Figure1Match(row.id, vi, transposed, var.tree, env)
    return None


def _match_variant(row, var, target):
    v0 = target[0]
    F, N = v0.shape
    terms = [parse_monomial(t) for t in (var.q11, var.q21, var.q22)]
    if N % 2 and any(neg for neg, _ in terms):
        return None
    generic_vars = _generic_entry_vars(row)

    root_names = list(row.roots)
    root_choices = []
    for name in root_names:
        vals = []
        for k in row.roots[name]:
            vals.extend(primitive_roots(k, F, N))
        root_choices.append(vals)

    for combo in product(*root_choices):
        base = dict(zip(root_names, combo))
        for env in _root_alternatives(row, base, generic_vars, F, N):
            env = _solve_generic(terms, target, env, generic_vars, F, N)
            if env is None:
                continue
            try:
                values = [evaluate(t, env, F, N) for t in terms]
            except StructureError:
                continue
            if tuple(values) != tuple(target):
                continue
            if _forbidden(row, env, F, N):
                continue
            return env
    return None


def _generic_entry_vars(row):
    # entry variables that stand for generic values, directly or via a substitution
    out = set(row.generic)
    for var, alts in row.subst.items():
        names = set()
        for a in alts:
            names.update(parse_monomial(a)[1])
        if names & set(row.generic):
            out.add(var)
            out -= names & set(row.generic)
    return out


def _root_alternatives(row, base, generic_vars, F, N):
    envs = [dict(base)]
    for var, alts in row.subst.items():
        if var in generic_vars:
            continue
        grown = []
        for e in envs:
            for expr in alts:
                e2 = dict(e)
                e2[var] = evaluate(expr, e, F, N)
                grown.append(e2)
        envs = grown
    return envs


def _solve_generic(terms, target, env, generic_vars, F, N):
    env = dict(env)
    pending = set(generic_vars)
    progress = True
    while pending and progress:
        progress = False
        for (neg, exps), t in zip(terms, target):
            unknown = [x for x in exps if x in pending]
            if len(unknown) != 1 or abs(exps[unknown[0]]) != 1:
                continue
            x = unknown[0]
            rest = {k: v for k, v in exps.items() if k != x}
            try:
                r = evaluate((neg, rest), env, F, N)
            except StructureError:
                return None
            env[x] = (t / r) ** exps[x]
            pending.discard(x)
            progress = True
    return None if pending else env


def _forbidden(row, env, F, N):
    for var, exprs in row.forbid.items():
        for expr in exprs:
            try:
                if env[var] == evaluate(expr, env, F, N):
                    return True
            except StructureError:
                continue
    for var, orders in row.forbid_orders.items():
        if value_order(env[var]) in orders:
            return True
    return False
