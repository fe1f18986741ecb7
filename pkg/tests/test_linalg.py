from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from capelli_quiver.linalg import (
    NonSquareError,
    NotIntegrallyGraded,
    RatMatrix,
    as_rat,
    char_poly,
    integer_eigensplit,
    integer_roots,
    inverse,
    is_nilpotent,
    rank,
    rank_factorization,
    rank_kernel,
)
from oracles import to_sympy

F = Fraction


def M(rows):
    return RatMatrix.from_rows(rows)


small_rat = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_dim=5, square=False):
    r = draw(st.integers(0, max_dim))
    c = r if square else draw(st.integers(0, max_dim))
    # bias towards low rank so kernels are nontrivial
    if r and c and draw(st.booleans()):
        k = draw(st.integers(1, min(r, c)))
        A = RatMatrix(r, k, draw(st.lists(small_rat, min_size=r * k, max_size=r * k)))
        B = RatMatrix(k, c, draw(st.lists(small_rat, min_size=k * c, max_size=k * c)))
        return A @ B
    return RatMatrix(r, c, draw(st.lists(small_rat, min_size=r * c, max_size=r * c)))


# ---------------------------------------------------------------- rank/kernel


def test_rank_kernel_identity():
    assert rank_kernel(RatMatrix.identity(2)) == (2, [])


def test_rank_kernel_zero():
    r, basis = rank_kernel(RatMatrix.zeros(2, 2))
    assert r == 0
    assert basis == [(1, 0), (0, 1)]


def test_rank_kernel_rank_one():
    r, basis = rank_kernel(M([[1, 2], [2, 4]]))
    assert r == 1
    assert basis == [(F(-2), F(1))]


@pytest.mark.parametrize("shape", [(0, 3), (3, 0), (0, 0)])
def test_empty_matrices(shape):
    A = RatMatrix.zeros(*shape)
    r, basis = rank_kernel(A)
    assert r == 0 and len(basis) == shape[1]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_kernel_properties(A):
    r, basis = rank_kernel(A)
    assert r + len(basis) == A.cols
    assert r == rank(A.T)
    for v in basis:
        assert all(x == 0 for x in A.apply(v))
    assert r == to_sympy(A).rank()


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernel_matches_sympy_span(A):
    _, basis = rank_kernel(A)
    ref = to_sympy(A).nullspace()
    assert len(basis) == len(ref)
    if basis:
        mine = to_sympy(RatMatrix.from_columns(basis, A.cols))
        assert sympy.Matrix.hstack(mine, *ref).rank() == len(basis)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rank_factorization_recombines(A):
    C, R = rank_factorization(A)
    assert C @ R == A


# ---------------------------------------------------------------- inverse


def test_inverse_examples():
    assert inverse(RatMatrix.identity(3)) == RatMatrix.identity(3)
    swap = M([[0, 1], [1, 0]])
    assert inverse(swap) == swap
    assert inverse(M([[1, 1], [0, 1]])) == M([[1, -1], [0, 1]])


def test_inverse_singular_and_nonsquare():
    assert inverse(M([[1, 2], [2, 4]])) is None
    with pytest.raises(NonSquareError):
        inverse(RatMatrix.zeros(2, 3))


@settings(max_examples=100, deadline=None)
@given(matrices(square=True))
def test_inverse_iff_full_rank(A):
    inv = inverse(A)
    r, _ = rank_kernel(A)
    assert (inv is None) == (r < A.rows)
    if inv is not None:
        assert inv @ A == RatMatrix.identity(A.rows)
        assert A @ inv == RatMatrix.identity(A.rows)


# ---------------------------------------------------------------- nilpotency


def test_nilpotent_examples():
    assert is_nilpotent(M([[0, 1, 2], [0, 0, 3], [0, 0, 0]]))
    assert not is_nilpotent(RatMatrix.identity(2))
    assert is_nilpotent(M([[2, -4], [1, -2]]))
    assert is_nilpotent(RatMatrix.zeros(0, 0))


# ---------------------------------------------------------------- spectra


def test_char_poly_against_sympy():
    A = M([[1, 2, 0], [3, -1, 4], [F(1, 2), 0, 2]])
    lam = sympy.Symbol("x")
    ref = to_sympy(A).charpoly(lam).all_coeffs()[::-1]
    assert [sympy.Rational(c.numerator, c.denominator) for c in char_poly(A)] == ref


def test_integer_roots():
    # (x - 2)^2 (x + 3) x (2x - 1)
    x = sympy.Symbol("x")
    coeffs = sympy.Poly(sympy.expand((x - 2) ** 2 * (x + 3) * x * (2 * x - 1)), x).all_coeffs()[::-1]
    assert integer_roots([F(int(c)) for c in coeffs]) == {-3: 1, 0: 1, 2: 2}


def test_eigensplit_examples():
    split = integer_eigensplit(M([[2, 0], [0, 3]]))
    assert split == {2: [(1, 0)], 3: [(0, 1)]}
    split = integer_eigensplit(M([[5, 1], [0, 5]]))
    assert list(split) == [5] and len(split[5]) == 2
    split = integer_eigensplit(M([[1, 1], [0, 2]]))
    assert split[1] == [(1, 0)]
    assert split[2] == [(1, 1)]


@pytest.mark.parametrize("rows", [[[0, 1], [2, 0]], [[F(1, 2)]], [[0, -1], [1, 0]]])
def test_eigensplit_rejects_nonintegral(rows):
    with pytest.raises(NotIntegrallyGraded, match="not integrally graded"):
        integer_eigensplit(M(rows))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
    st.lists(st.integers(-3, 3), min_size=16, max_size=16),
)
def test_eigensplit_properties(eigs, noise):
    n = len(eigs)
    # upper triangular with integer diagonal, then conjugated by a unipotent matrix
    T = RatMatrix(n, n, [eigs[i] if i == j else (noise[i * 4 + j] if j > i else 0) for i in range(n) for j in range(n)])
    P = RatMatrix(n, n, [1 if i == j else (noise[(i + j) % 16] if i > j else 0) for i in range(n) for j in range(n)])
    A = P @ T @ inverse(P)
    pieces = integer_eigensplit(A)
    basis = [v for vs in pieces.values() for v in vs]
    assert rank(RatMatrix.from_columns(basis, n)) == n
    for p, vs in pieces.items():
        B = RatMatrix.from_columns(vs, n)
        # invariance: A B = B X for some X, i.e. rank([B | AB]) == rank(B)
        assert rank(B.hstack(A @ B)) == len(vs)
        restricted = _restrict(A.shift(-p), B)
        assert is_nilpotent(restricted)


def _restrict(A, B):
    G = inverse(B.T @ B)
    return G @ B.T @ A @ B


def test_as_rat_refuses_floats():
    with pytest.raises(TypeError):
        as_rat(0.5)
    assert as_rat("−3/6") == F(-1, 2)
