from math import comb

from arithroot.dimension import nichols_dimension, pbw_height
from arithroot.figure1 import instantiate
from arithroot.groupoid import generate

from conftest import mat


def dim(Q):
    return nichols_dimension(Q, generate(Q).roots)


def test_height_examples():
    assert pbw_height(mat("-1", "1", "1", "-1", N=2), (1, 0)) == 2
    assert pbw_height(mat("q", "1", "q^-1", "q"), (1, 1)) is None
    assert pbw_height(mat("1", "1", "1", "z", N=3), (1, 0)) is None


def test_exterior_algebra():
    # two anticommuting odd generators: sum of binomial(2, k)
    d = dim(mat("-1", "1", "1", "-1", N=2))
    assert d.kind == "finite_dim"
    assert d.value == sum(comb(2, k) for k in range(3)) == 4


def test_small_quantum_group_a2():
    d = dim(mat("z", "1", "z^-1", "z", N=3))
    assert d.value == 3 ** 3
    assert sorted(h for _, h in d.factors) == [3, 3, 3]


def test_infinite_dimension():
    d = dim(mat("-1", "1", "q", "-1", N=2))
    assert d.kind == "infinite_dim" and d.witness == (1, 1)


def test_row7_dimension():
    # heights: q11 = zeta (3), q22 = -1 (2), chi(e1+e2) = zeta^2 (3), chi(2e1+e2) = -1 (2)
    assert dim(mat("z^2", "1", "-z^2", "-1", N=6)).value == 36


def test_dimension_twist_invariant():
    a = dim(mat("z^4", "1", "z^-3", "-z^2", N=12))
    b = dim(mat("z^4", "z^7", "z^-10", "-z^2", N=12))
    assert a == b


def test_dimension_constant_on_rows():
    for row in (8, 9, 10, 12, 13, 14, 15, 16):
        values = {dim(i.braiding).value for i in instantiate(row) if i.root_order == max(
            j.root_order for j in instantiate(row))}
        assert len(values) == 1, (row, values)
