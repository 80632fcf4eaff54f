from fractions import Fraction
from itertools import combinations

import sympy
from hypothesis import given, strategies as st

from troplimits import linalg

small = st.integers(-5, 5)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]))


@given(matrices())
def test_rank_matches_sympy(A):
    assert linalg.rank(A, len(A[0])) == sympy.Matrix(A).rank()


@given(matrices())
def test_nullspace_is_annihilated_and_has_right_size(A):
    n = len(A[0])
    ker = linalg.nullspace(A, n)
    assert len(ker) == n - sympy.Matrix(A).rank()
    for v in ker:
        assert all(linalg.dot(row, v) == 0 for row in A)


@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_solve(A, b):
    b = b[:len(A)]
    x = linalg.solve(A, b, len(A[0]))
    consistent = sympy.Matrix(A).rank() == sympy.Matrix(A).row_join(sympy.Matrix(b)).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert list(linalg.matvec(A, x)) == [Fraction(v) for v in b]


@given(matrices(cols=st.integers(2, 4)))
def test_column_hermite_is_unimodular(A):
    n = len(A[0])
    H, U = linalg.column_hermite(A, n)
    assert abs(sympy.Matrix(U).det()) == 1
    assert [list(r) for r in linalg.matmul(A, U)] == [list(r) for r in H]


@given(matrices(cols=st.integers(2, 4)))
def test_integer_kernel_is_saturated(A):
    n = len(A[0])
    K = linalg.integer_kernel(A, n)
    for v in K:
        assert all(isinstance(x, int) for x in v)
        assert all(linalg.dot(row, v) == 0 for row in A)
    if K:
        # a lattice basis of a saturated sublattice has gcd of maximal minors 1
        minors = sympy.Matrix(K).T
        k = len(K)
        g = 0
        for rows in combinations(range(n), k):
            g = sympy.gcd(g, minors.extract(list(rows), list(range(k))).det())
        assert abs(g) == 1


def test_primitive():
    assert linalg.primitive((Fraction(1, 2), Fraction(3, 4))) == (2, 3)
    assert linalg.primitive((0, -6, 4)) == (0, -3, 2)
