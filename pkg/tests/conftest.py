import random

import pytest
from hypothesis import strategies as st

from arithroot.bicharacter import BraidingMatrix
from arithroot.notation import evaluate
from arithroot.values import GroupValue


def mat(*entries, N=1, free=("q",)):
    """Braiding matrix from shorthand entries in the names ``free`` and ``z``."""
    F = len(free)
    env = {name: GroupValue.param(k, F, N) for k, name in enumerate(free)}
    env["z"] = GroupValue.root(1, F, N)
    vals = [evaluate(e, env, F, N) for e in entries]
    n = int(len(vals) ** 0.5)
    assert n * n == len(vals)
    return BraidingMatrix(tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(n)))


@st.composite
def group_values(draw, F, N, bound=6):
    free = tuple(draw(st.integers(-bound, bound)) for _ in range(F))
    return GroupValue(free, draw(st.integers(0, N - 1)), N)


@st.composite
def rank2_matrices(draw, max_N=24, max_F=1, bound=6):
    N = draw(st.integers(1, max_N))
    F = draw(st.integers(0, max_F))
    vals = [draw(group_values(F, N, bound)) for _ in range(4)]
    return BraidingMatrix.rank2(*vals)


def random_rank2_sample(count=300, seed=20041018, max_N=24, bound=6):
    """Deterministic sample of rank-2 braidings.

    Two thirds are uniform; the rest are Figure-1 rows with the generic
    parameter specialised to a random root of unity and a random twist
    applied, so that finite cases are well represented.
    """
    from arithroot.figure1 import FIGURE1, instantiate

    rng = random.Random(seed)
    out = []
    n_uniform = 2 * count // 3
    for _ in range(n_uniform):
        N = rng.randint(1, max_N)
        F = rng.choice((0, 0, 1))

        def v():
            return GroupValue(tuple(rng.randint(-bound, bound) for _ in range(F)), rng.randint(0, N - 1), N)

        out.append(BraidingMatrix.rank2(v(), v(), v(), v()))
    while len(out) < count:
        row = rng.choice(FIGURE1)
        inst = rng.choice(instantiate(row))
        Q = inst.braiding
        F, N0 = Q.shape
        N = rng.choice([k for k in range(2, max_N + 1, 2) if k % N0 == 0] or [N0])
        Q = Q.lift(F, N)
        specs = [rng.randint(0, N - 1) for _ in range(F)]

        def spec(v):
            tors = v.tors + sum(a * s for a, s in zip(v.free, specs))
            return GroupValue((), tors, N)

        t = GroupValue((), rng.randint(0, N - 1), N)
        q11, q12, q21, q22 = (spec(Q[i, j]) for i, j in ((0, 0), (0, 1), (1, 0), (1, 1)))
        out.append(BraidingMatrix.rank2(q11, q12 * t, q21 * t.inv(), q22))
    return out


@pytest.fixture(scope="session")
def rank2_sample():
    return random_rank2_sample()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
