import random
from fractions import Fraction

import pytest

from conftest import random_config
from fatpoints.exactmath import rank
from fatpoints.geometry import (
    HORIZONTAL,
    VERTICAL,
    Fiber,
    ProjCoord,
    affine_config,
    grid_config,
    make_config,
    normalize_point,
)
from fatpoints.linsys import (
    BiDegree,
    BiForm,
    conditions_matrix,
    divide_by_fiber,
    fiber_form,
    h0,
    h0_modp,
    has_section,
    mult_at,
    n_conditions,
    witness_form,
)
from oracles import derivative_h0

EMPTY = make_config([])
ONE = make_config([((1, 0), (1, 0))])
DOUBLE = make_config([((1, 0), (1, 0))], [2])


def test_bidegree():
    assert BiDegree.of(2, 3).dim == 12
    assert BiDegree.of(1, 1).monomials() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(ValueError):
        BiDegree.of(-1, 0)


def test_conditions_matrix_shapes():
    C = conditions_matrix(EMPTY, (1, 1))
    assert C.matrix.shape == (0, 4)
    C = conditions_matrix(ONE, (1, 1))
    assert C.matrix.shape == (1, 4) and rank(C.matrix) == 1
    C = conditions_matrix(DOUBLE, (1, 1))
    assert C.matrix.shape == (3, 4) and rank(C.matrix) == 3
    assert C.row_labels == ((0, (0, 0)), (0, (0, 1)), (0, (1, 0)))


def test_h0_examples():
    assert h0(EMPTY, (1, 1)) == 4
    assert h0(ONE, (1, 1)) == 3
    assert h0(DOUBLE, (1, 1)) == 1


def test_witness_examples():
    assert witness_form(EMPTY, (0, 0)) == BiForm.from_grid([[1]])
    assert witness_form(ONE, (0, 0)) is None
    # double point at ([1:3],[1:5]): the witness is (x1 - 3x0)(y1 - 5y0)
    Z = make_config([((1, 3), (1, 5))], [2])
    f = witness_form(Z, (1, 1))
    assert f == BiForm.from_grid([[15, -3], [-5, 1]]).normalized()


def test_mult_at_examples():
    P = normalize_point((1, 0), (1, 1))
    x1 = BiForm.monomial(1, 1, 0, 0)
    x0 = BiForm.monomial(0, 1, 0, 0)
    assert mult_at(x1, P) == 1
    assert mult_at(x0, P) == 0
    node = fiber_form(Fiber(VERTICAL, P.x)) * fiber_form(Fiber(HORIZONTAL, P.y))
    assert mult_at(node, P) == 2


def test_zero_form_rejected():
    with pytest.raises(ValueError):
        BiForm.from_grid([[0, 0]])


def test_divide_by_fiber_examples():
    g = BiForm.from_grid([[1, 2], [3, 4]])
    x1 = BiForm.monomial(1, 1, 0, 0)
    F = Fiber(VERTICAL, ProjCoord(Fraction(1), Fraction(0)))
    assert divide_by_fiber(x1 * g, F) == g
    diagonal = BiForm.from_grid([[0, 1], [-1, 0]])
    assert divide_by_fiber(diagonal, F) is None


def test_grid_witness_strips_to_constant():
    Z = grid_config(range(2), range(2), 2)
    f = witness_form(Z, (2, 2))
    assert f is not None and h0(Z, (2, 2)) == 1
    for direction, coords in ((VERTICAL, Z.x_coords()), (HORIZONTAL, Z.y_coords())):
        for c in coords:
            f = divide_by_fiber(f, Fiber(direction, c))
            assert f is not None
    assert f.deg == (0, 0)
    assert divide_by_fiber(f, Fiber(VERTICAL, Z.x_coords()[0])) is None


def test_division_at_infinity():
    P = normalize_point((0, 1), (1, 2))
    F = Fiber(VERTICAL, P.x)
    g = BiForm.from_grid([[1, 1], [2, 0], [0, 5]])
    q = divide_by_fiber(fiber_form(F) * g, F)
    assert q == g


def _instances(n, seed, **kw):
    rng = random.Random(seed)
    for _ in range(n):
        Z = random_config(rng, **kw)
        d = (rng.randint(0, 4), rng.randint(0, 4))
        yield rng, Z, d


def test_h0_matches_derivative_oracle():
    for _, Z, d in _instances(60, 11, m_max=3):
        assert h0(Z, d) == derivative_h0(Z, *d), (Z, d)


def test_h0_matches_oracle_at_infinity():
    Z = make_config([((0, 1), (1, 2)), ((1, 1), (0, 1)), ((1, 0), (1, 0))], [2, 3, 1])
    for d in [(1, 1), (2, 3), (3, 3), (4, 2)]:
        assert h0(Z, d) == derivative_h0(Z, *d)


def test_h0_lower_bound_and_modular_agreement():
    for _, Z, d in _instances(100, 12, m_max=3):
        exact = h0(Z, d)
        assert exact >= BiDegree.of(*d).dim - n_conditions(Z)
        assert h0_modp(Z, d) >= exact
        assert has_section(Z, d, modp=1_000_003) == (exact > 0)


def test_h0_monotone():
    for rng, Z, d in _instances(80, 13, m_max=2):
        bigger = (d[0] + rng.randint(0, 1), d[1] + rng.randint(0, 1))
        assert h0(Z, bigger) >= h0(Z, d)
        k = rng.randrange(len(Z))
        mults = list(Z.mults)
        mults[k] += 1
        assert h0(make_config(list(Z.points), mults), d) <= h0(Z, d)


def test_witness_multiplicity_and_division_roundtrip():
    for rng, Z, d in _instances(80, 14, m_max=3):
        f = witness_form(Z, d)
        if f is None:
            assert h0(Z, d) == 0
            continue
        assert all(mult_at(f, P) >= m for P, m in Z)
        P = rng.choice(Z.points)
        for F in (Fiber(VERTICAL, P.x), Fiber(HORIZONTAL, P.y)):
            q = divide_by_fiber(f, F)
            if q is not None:
                assert q * fiber_form(F) == f


def test_affine_config_rational_coords():
    Z = affine_config([(Fraction(1, 2), Fraction(-2, 3)), (0, 0)], [2, 1])
    for d in [(1, 2), (2, 2)]:
        assert h0(Z, d) == derivative_h0(Z, *d)
