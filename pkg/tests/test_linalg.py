from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brunnian.linalg import (
    IntegerLattice,
    IntMatrix,
    hnf,
    kernel_lattice,
    lattice_contains,
    lattice_equal,
    lattice_sum,
    rank_rational,
    xgcd,
)


def fraction_rank(rows):
    """Plain Gauss-Jordan over Q, used as an independent oracle."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def is_hnf(rows):
    last = -1
    for i, r in enumerate(rows):
        c = next(j for j, x in enumerate(r) if x)
        if c <= last or r[c] <= 0:
            return False
        for above in rows[:i]:
            if not 0 <= above[c] < r[c]:
                return False
        last = c
    return True


matrices = st.integers(1, 5).flatmap(
    lambda ncols: st.lists(st.lists(st.integers(-6, 6), min_size=ncols, max_size=ncols),
                           min_size=1, max_size=6))


def test_hnf_examples():
    assert hnf([[2, 4], [6, 8]]).rows == ((2, 0), (0, 4))
    assert hnf(IntMatrix.identity(3)).rows == IntMatrix.identity(3).rows
    assert hnf([[0, 0]]).rows == ()


def test_rank_examples():
    assert rank_rational(IntMatrix.identity(4)) == 4
    assert rank_rational([[1, 2], [2, 4]]) == 1
    assert 3 - rank_rational([[1, 1, 1]]) == 2


def test_kernel_examples():
    K = kernel_lattice([[1, 1, 1]])
    assert K.rank == 2
    assert (1, -1, 0) in K
    assert kernel_lattice(IntMatrix.identity(3)) == IntegerLattice.zero(3)
    assert kernel_lattice(IntMatrix.zeros(1, 3)) == IntegerLattice.full(3)


def test_lattice_sum_examples():
    A = IntegerLattice.from_rows(2, [(2, 0)])
    assert lattice_sum(A, IntegerLattice.zero(2)) == A
    assert (A + IntegerLattice.from_rows(2, [(0, 3)])).basis == ((2, 0), (0, 3))
    assert (IntegerLattice.from_rows(2, [(1, 1)]) + IntegerLattice.from_rows(2, [(1, -1)])).basis == ((1, 1), (0, 2))


def test_membership_examples():
    A = IntegerLattice.from_rows(2, [(2, 0), (0, 2)])
    assert lattice_equal(A, A)
    assert not lattice_contains(A, (1, 1))
    assert lattice_contains(IntegerLattice.from_rows(2, [(1, 1), (0, 2)]), (3, 1))


def test_dimension_mismatch_errors():
    with pytest.raises(ValueError):
        lattice_sum(IntegerLattice.zero(2), IntegerLattice.zero(3))
    with pytest.raises(ValueError):
        lattice_contains(IntegerLattice.zero(2), (1, 2, 3))
    with pytest.raises(ValueError):
        lattice_equal(IntegerLattice.zero(1), IntegerLattice.zero(2))


def test_matrix_json_uses_decimal_strings():
    assert IntMatrix.from_rows([[10 ** 30, -1]]).to_json() == '[["' + str(10 ** 30) + '", "-1"]]'


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert g == gcd(a, b) and s * a + t * b == g


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_hnf_shape_idempotent_and_row_space(rows):
    H = hnf(rows)
    assert is_hnf(H.rows)
    assert hnf(H).rows == H.rows
    L = IntegerLattice.from_rows(len(rows[0]), rows)
    assert all(lattice_contains(L, r) for r in rows)
    orig = IntegerLattice.from_rows(len(rows[0]), rows)
    assert all(lattice_contains(orig, r) for r in H.rows)
    assert len(H.rows) == fraction_rank(rows)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_matches_fraction_oracle(rows):
    assert rank_rational(rows) == fraction_rank(rows)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_kernel_is_exact_and_saturated(rows):
    M = IntMatrix.from_rows(rows)
    K = kernel_lattice(M)
    for v in K.basis:
        assert all(x == 0 for x in M.apply(v))
    assert rank_rational(M) + K.rank == M.ncols
    assert K.is_saturated()
    # saturation: a vector of the kernel divided by its content stays inside
    for v in K.basis:
        c = 0
        for x in v:
            c = gcd(c, x)
        assert tuple(x // c for x in v) in K


@settings(max_examples=100, deadline=None)
@given(matrices, matrices)
def test_lattice_sum_laws(a, b):
    d = min(len(a[0]), len(b[0]))
    A = IntegerLattice.from_rows(d, [r[:d] for r in a])
    B = IntegerLattice.from_rows(d, [r[:d] for r in b])
    C = IntegerLattice.from_rows(d, [[1] * d])
    assert A + B == B + A
    assert (A + B) + C == A + (B + C)
    assert A + A == A


def test_finite_index_sublattice_is_not_saturated():
    assert not IntegerLattice.from_rows(2, [(2, 0)]).is_saturated()
    assert IntegerLattice.from_rows(2, [(2, 0)]) != IntegerLattice.from_rows(2, [(1, 0)])
