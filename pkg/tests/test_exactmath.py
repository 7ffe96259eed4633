from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatpoints.exactmath import (
    DEFAULT_PRIME,
    Matrix,
    MixedModeError,
    ModulusError,
    bareiss_rank,
    certified_kernel_vector,
    is_prime,
    kernel_basis,
    rank,
    rank_modp,
    rational_reconstruction,
    reduce_mod,
)
from oracles import sympy_rank


def test_rank_examples():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.zeros(2, 4)) == 0
    assert rank(Matrix([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix([[1, 1]])) == [(1, -1)]
    assert kernel_basis(Matrix.identity(2)) == []
    (v,) = kernel_basis(Matrix([[1, 2], [2, 4]]))
    # proportional to (-2, 1), scaled so the first entry is 1
    assert v == (1, Fraction(-1, 2))


def test_rank_modp_examples():
    assert rank_modp(Matrix.identity(3), 5) == 3
    assert rank_modp(Matrix([[5, 0], [0, 1]]), 5) == 1
    assert rank_modp(Matrix([[Fraction(1, 2)]]), 3) == 1


def test_rank_modp_rejects_bad_denominator():
    with pytest.raises(ModulusError, match=r"entry \(0, 1\)"):
        rank_modp(Matrix([[1, Fraction(1, 7)]]), 7)


def test_rank_modp_rejects_composite():
    with pytest.raises(ValueError):
        rank_modp(Matrix([[1]]), 9)


def test_mixed_mode_rejected():
    with pytest.raises(MixedModeError):
        Matrix([[Fraction(1, 2), 1]], modulus=5)
    with pytest.raises(MixedModeError):
        Matrix([[7]], modulus=5)
    with pytest.raises(MixedModeError):
        Matrix([[1.5]])


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])


def test_modular_matrix_rank_and_kernel():
    M = Matrix([[1, 2], [2, 4]], modulus=7)
    assert rank(M) == 1
    (v,) = kernel_basis(M)
    assert v[0] == 1
    assert M.apply(v) == (0, 0)


def test_reduce_mod():
    R = reduce_mod(Matrix([[Fraction(1, 2), -1]]), 5)
    assert R.rows == ((3, 4),)
    assert R.modulus == 5


def test_bareiss_fraction_free_on_wide_and_tall():
    assert bareiss_rank([[2, 4, 6], [1, 2, 3]]) == 1
    assert bareiss_rank([[0, 1], [0, 2], [1, 0]]) == 2
    assert bareiss_rank([[0, 0, 1], [0, 0, 2]]) == 1


def test_rank_with_rational_entries():
    M = Matrix([[Fraction(1, 3), Fraction(2, 3)], [Fraction(1, 2), 1]])
    assert rank(M) == 1


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(DEFAULT_PRIME)


def test_rational_reconstruction_roundtrip():
    N = (2**31 - 1) * (2**31 - 19)
    for q in (Fraction(-7, 12), Fraction(123456, 789), Fraction(0), Fraction(5)):
        u = q.numerator * pow(q.denominator, -1, N) % N
        assert rational_reconstruction(u, N) == q


def test_certified_kernel_vector():
    M = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    v = certified_kernel_vector(M)
    assert v is not None and any(v)
    assert M.apply(v) == (0, 0, 0)
    assert certified_kernel_vector(Matrix.identity(3)) is None


small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    entries = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
    # a few rational entries keep the denominator clearing honest
    if draw(st.booleans()):
        i, j = draw(st.integers(0, r - 1)), draw(st.integers(0, c - 1))
        entries[i][j] = Fraction(entries[i][j], draw(st.integers(2, 5)))
    return Matrix(entries)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_equals_transpose_rank(M):
    assert rank(M) == rank(M.transpose())


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_nullity_and_exact_kernel(M):
    basis = kernel_basis(M)
    assert rank(M) + len(basis) == M.ncols
    for v in basis:
        assert all(x == 0 for x in M.apply(v))
        assert next(x for x in v if x) == 1


@settings(max_examples=200, deadline=None)
@given(matrices(), st.sampled_from([2, 3, 5, 7, 1_000_003]))
def test_modular_rank_never_exceeds_rational(M, p):
    try:
        assert rank_modp(M, p) <= rank(M)
    except ModulusError:
        pass


@settings(max_examples=100, deadline=None)
@given(matrices(max_dim=6))
def test_rank_matches_sympy(M):
    assert rank(M) == sympy_rank(M.rows, M.ncols)
