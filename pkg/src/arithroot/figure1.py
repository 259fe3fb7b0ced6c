"""The rank-2 table of Weyl equivalence classes with finite root system.

Every row fixes ``q12 = 1`` and lists one or more ``(q11, q21, q22)``
patterns that form a single Weyl equivalence class.  Patterns are monomial
strings in *entry variables* (``q``, ``zeta``, ``a``, ``b``).  An entry
variable is either a parameter itself or is obtained from one through the
alternatives in ``subst`` (e.g. ``q in {q0, -q0^-1}``).

``roots`` maps a root-of-unity parameter to the primitive orders it may
have; ``generic`` lists parameters that range over (almost) all nonzero
values; ``forbid`` and ``forbid_orders`` give the excluded values of an
entry variable.  Tree labels are kept as opaque strings.
"""

from dataclasses import dataclass, field
from math import lcm

from .bicharacter import BraidingMatrix
from .notation import evaluate
from .values import GroupValue


@dataclass(frozen=True)
class Variant:
    q11: str
    q21: str
    q22: str
    tree: str


@dataclass(frozen=True)
class Figure1Row:
    id: int
    variants: tuple
    roots: dict = field(default_factory=dict)
    generic: tuple = ()
    subst: dict = field(default_factory=dict)
    forbid: dict = field(default_factory=dict)
    forbid_orders: dict = field(default_factory=dict)


V = Variant

FIGURE1 = (
    Figure1Row(1, (V("a", "1", "b", "T1"),), generic=("a", "b")),
    Figure1Row(2, (V("q", "q^-1", "q", "T2"),), generic=("q",), forbid={"q": ("1",)}),
    Figure1Row(
        3,
        (V("q", "q^-1", "-1", "T2"), V("-1", "q", "-1", "T2")),
        generic=("q",),
        forbid={"q": ("1", "-1")},
    ),
    Figure1Row(4, (V("q", "q^-2", "q^2", "T3"),), generic=("q",), forbid={"q": ("1", "-1")}),
    Figure1Row(
        5,
        (V("q", "q^-2", "-1", "T3"),),
        generic=("q0",),
        subst={"q": ("q0", "-q0^-1")},
        forbid={"q": ("1", "-1")},
    ),
    Figure1Row(
        6,
        (V("zeta", "q^-1", "q", "T3"),),
        roots={"zeta": (3,)},
        generic=("q0",),
        subst={"q": ("q0", "zeta*q0^-1")},
        forbid={"q": ("1", "zeta", "zeta^2")},
    ),
    Figure1Row(
        7,
        (V("zeta", "-zeta", "-1", "T3"),),
        roots={"zeta0": (3,)},
        subst={"zeta": ("zeta0", "zeta0^2")},
    ),
    Figure1Row(
        8,
        (
            V("zeta^4", "zeta^-3", "-zeta^2", "T4"),
            V("zeta^4", "zeta^-1", "-1", "T5"),
            V("zeta^-3", "zeta", "-1", "T7"),
        ),
        roots={"zeta0": (12,)},
        subst={"zeta": ("zeta0", "-zeta0^-1")},
    ),
    Figure1Row(
        9,
        (
            V("-zeta^2", "zeta", "-zeta^2", "T4"),
            V("-zeta^2", "zeta^3", "-1", "T5"),
            V("-zeta^-1", "zeta^-3", "-1", "T7"),
        ),
        roots={"zeta": (12,)},
    ),
    Figure1Row(
        10,
        (
            V("zeta", "zeta^-2", "-zeta^3", "T6"),
            V("-zeta^2", "-zeta", "-1", "T14"),
            V("-zeta^3", "-zeta^-1", "-1", "T9"),
        ),
        roots={"zeta": (18,)},
    ),
    Figure1Row(
        11,
        (V("q", "q^-3", "q^3", "T8"),),
        generic=("q",),
        forbid={"q": ("1", "-1")},
        forbid_orders={"q": (3,)},
    ),
    Figure1Row(
        12,
        (
            V("zeta^2", "zeta", "zeta^-1", "T8"),
            V("zeta^2", "-zeta^-1", "-1", "T8"),
            V("zeta", "-zeta", "-1", "T8"),
        ),
        roots={"zeta": (8,)},
    ),
    Figure1Row(
        13,
        (
            V("zeta^6", "-zeta^-1", "zeta^8", "T10"),
            V("zeta^6", "zeta", "zeta^-1", "T13"),
            V("zeta^8", "zeta^5", "-1", "T17"),
            V("zeta", "zeta^-5", "-1", "T21"),
        ),
        roots={"zeta": (24,)},
    ),
    Figure1Row(
        14,
        (V("zeta", "zeta^-3", "-1", "T11"), V("-zeta^-2", "zeta^3", "-1", "T16")),
        roots={"zeta0": (5, 20)},
        subst={"zeta": ("zeta0", "zeta0^11")},
    ),
    Figure1Row(
        15,
        (
            V("zeta", "zeta^-3", "-zeta^5", "T12"),
            V("-zeta^3", "-zeta^4", "-zeta^-4", "T15"),
            V("-zeta^5", "-zeta^-2", "-1", "T18"),
            V("-zeta^3", "-zeta^2", "-1", "T20"),
        ),
        roots={"zeta": (30,)},
    ),
    Figure1Row(
        16,
        (V("zeta", "zeta^-3", "-1", "T19"), V("-zeta^-2", "zeta^3", "-1", "T22")),
        roots={"zeta": (14,)},
    ),
)

ROWS = {row.id: row for row in FIGURE1}


@dataclass(frozen=True)
class Instance:
    row: int
    variant: int
    alternative: int
    root_order: int
    braiding: BraidingMatrix
    tree: str
    env: dict = field(compare=False, hash=False)


def instantiate(row, root_order=None):
    """Concrete matrices for every variant and alternative of a row.

    Generic parameters become independent free generators; a root-of-unity
    parameter of order k becomes ``z^(N/k)`` with ``N = lcm(2, k)``.
    """
    if isinstance(row, int):
        row = ROWS[row]
    orders = set()
    for allowed in row.roots.values():
        orders.update(allowed)
    if root_order is None:
        choices = sorted(orders) or [1]
    else:
        choices = [root_order]
    out = []
    for k in choices:
        out.extend(_instantiate_at(row, k))
    return out


def _instantiate_at(row, k):
    N = lcm(2, k)
    F = len(row.generic)
    env = {}
    for idx, name in enumerate(row.generic):
        env[name] = GroupValue.param(idx, F, N)
    for name in row.roots:
        env[name] = GroupValue.root(N // k, F, N)
    alternatives = _alternative_envs(row, env, F, N)
    out = []
    for vi, var in enumerate(row.variants):
        for ai, alt_env in enumerate(alternatives):
            q11 = evaluate(var.q11, alt_env, F, N)
            q21 = evaluate(var.q21, alt_env, F, N)
            q22 = evaluate(var.q22, alt_env, F, N)
            Q = BraidingMatrix.rank2(q11, GroupValue.one(F, N), q21, q22)
            out.append(Instance(row.id, vi, ai, k, Q, var.tree, alt_env))
    return out


def _alternative_envs(row, env, F, N):
    envs = [dict(env)]
    for var, alts in row.subst.items():
        grown = []
        for e in envs:
            for expr in alts:
                e2 = dict(e)
                e2[var] = evaluate(expr, e, F, N)
                grown.append(e2)
        envs = grown
    return envs


def all_instances():
    return [inst for row in FIGURE1 for inst in instantiate(row)]
