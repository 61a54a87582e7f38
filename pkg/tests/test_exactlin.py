"""Exact scalar and linear algebra checks."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hopf16.exactlin import HALF, MINUS_ONE, ONE, XI, ZERO, Mat, QQi, kron, qi


def test_xi_powers():
    assert XI * XI == MINUS_ONE
    assert XI * XI * XI * XI == ONE
    assert XI.inv() == -XI


def test_scalar_basic():
    x = qi(1, 2, 3)          # (1 + 2 xi)/3
    y = qi(-2, 1, 6)
    assert x + y == qi(0, 5, 6)
    assert x - x == ZERO
    assert x * x.inv() == ONE
    assert (x / y) * y == x
    assert HALF + HALF == ONE
    assert x.conj().conj() == x


def test_scalar_normalization():
    assert qi(2, 4, 6) == qi(1, 2, 3)
    assert qi(-1, 0, -2) == HALF
    assert qi(0, 0, 5) == ZERO
    assert qi(Fraction(1, 2), Fraction(1, 3)) == qi(3, 2, 6)


scalars = st.builds(qi,
                    st.integers(min_value=-8, max_value=8),
                    st.integers(min_value=-8, max_value=8),
                    st.integers(min_value=1, max_value=8))


@given(scalars, scalars, scalars)
def test_distributivity(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(scalars, scalars)
def test_mul_commutes(a, b):
    assert a * b == b * a


def test_rank_examples():
    assert Mat.identity(2).rank() == 2
    assert Mat.zero(3, 3).rank() == 0
    # row2 = xi * row1
    m = Mat.from_rows([[ONE, XI], [XI, MINUS_ONE]])
    assert m.rank() == 1


def test_kernel_examples():
    assert Mat.identity(4).kernel_basis() == []
    assert len(Mat.zero(2, 2).kernel_basis()) == 2
    m = Mat.from_rows([[ONE, XI]])
    basis = m.kernel_basis()
    assert len(basis) == 1
    v = basis[0]
    # solves 1*a + xi*b = 0, i.e. proportional to (-xi, 1)
    assert v[0] * ONE + v[1] * XI == ZERO
    t = v[1]
    assert [x * t.inv() for x in v] == [-XI, ONE]


def test_solve_examples():
    eye = Mat.identity(3)
    b = [ONE, XI, HALF]
    assert eye.solve(b) == b
    assert Mat.from_rows([[ZERO]]).solve([ONE]) is None
    m = Mat.from_rows([[ONE, ONE], [ZERO, XI]])
    assert m.solve([ZERO, ONE]) == [XI, -XI]


def test_kron_examples():
    eye2 = Mat.identity(2)
    assert kron(eye2, eye2) == Mat.identity(4)
    d = Mat.from_rows([[XI]])
    assert kron(d, d) == Mat.from_rows([[MINUS_ONE]])
    swap = Mat.from_rows([[ZERO, ONE], [ONE, ZERO]])
    s16 = kron(swap, swap)
    assert s16 @ s16 == Mat.identity(4)


small_entries = st.integers(min_value=-3, max_value=3)


def _rand_mat(rows, cols, data):
    return Mat.from_rows([[qi(data.draw(small_entries), data.draw(small_entries))
                           for _ in range(cols)] for _ in range(rows)])


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_rank_nullity(data):
    rows = data.draw(st.integers(min_value=1, max_value=4))
    cols = data.draw(st.integers(min_value=1, max_value=4))
    m = _rand_mat(rows, cols, data)
    assert m.rank() + len(m.kernel_basis()) == cols


@given(st.data())
@settings(max_examples=20, deadline=None)
def test_kron_associative(data):
    mats = [_rand_mat(2, 2, data) for _ in range(3)]
    a, b, c = mats
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@given(st.data())
@settings(max_examples=20, deadline=None)
def test_kernel_vectors_annihilate(data):
    m = _rand_mat(3, 4, data)
    for v in m.kernel_basis():
        assert all(x.is_zero() for x in m.mul_vec(v))


def test_inverse():
    m = Mat.from_rows([[ONE, XI], [ZERO, HALF]])
    assert m @ m.inverse() == Mat.identity(2)
    assert m.inverse() @ m == Mat.identity(2)
