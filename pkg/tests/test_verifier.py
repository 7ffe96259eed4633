from fractions import Fraction

import pytest

from fatpoints import verifier
from fatpoints.configfile import NEAR_GRID
from fatpoints.geometry import affine_config
from fatpoints.verifier import (
    EnumSpec,
    check_chudnovsky,
    check_five_jumps,
    check_grid_formula,
    check_no_double_stagnation,
    check_stagnation_implies_grid,
    enumerate_configs,
    moebius_permutations,
    replay,
    run_suite,
)


def test_enumeration_counts():
    assert len(list(enumerate_configs(EnumSpec.box(2, (1, 2))))) == 10
    assert len(list(enumerate_configs(EnumSpec.box(2, (4, 4))))) == 1
    assert list(enumerate_configs(EnumSpec.box(2, (3, 2)))) == []
    assert len(list(enumerate_configs(EnumSpec.box(3, (1, 4))))) == 9 + 36 + 84 + 126


def test_enumeration_is_lexicographic_and_deterministic():
    spec = EnumSpec.box(3, (2, 3))
    assert list(enumerate_configs(spec)) == list(enumerate_configs(spec))
    first = next(enumerate_configs(spec))
    assert first == affine_config([(0, 0), (0, 1)])


def test_sampling():
    spec = EnumSpec.box(3, (5, 6), sample=(20, 3))
    a = list(enumerate_configs(spec))
    assert len(a) == 20 and a == list(enumerate_configs(spec))
    assert a != list(enumerate_configs(EnumSpec.box(3, (5, 6), sample=(20, 4))))
    assert all(len(Z) in (5, 6) for Z in a)


def test_invalid_specs():
    with pytest.raises(ValueError):
        EnumSpec(((0, 0), (1,)), (1, 1))
    with pytest.raises(ValueError):
        EnumSpec(((), (1,)), (1, 1))
    with pytest.raises(ValueError):
        EnumSpec.box(2, (1, 5))


def test_moebius_permutations():
    vals = [Fraction(v) for v in range(3)]
    assert len(moebius_permutations(vals)) == 6
    # swapping 0,1 while fixing 2,3 needs a harmonic quadruple, which this is not
    perms = moebius_permutations([Fraction(v) for v in range(4)])
    assert (3, 2, 1, 0) in perms and (1, 0, 2, 3) not in perms


def test_symmetry_reduces_but_covers_all_orbits():
    full = list(enumerate_configs(EnumSpec.box(3, (1, 3))))
    reduced = list(enumerate_configs(EnumSpec.box(3, (1, 3), symmetry=True)))
    assert 0 < len(reduced) < len(full)
    assert set(reduced) <= set(full)


def test_checks_on_small_box():
    spec = EnumSpec.box(2, (1, 4))
    for check in (check_stagnation_implies_grid, check_no_double_stagnation, check_chudnovsky):
        rep = check(spec, 3)
        assert rep.passed and rep.configs_tested == 15


def test_five_jumps_on_example():
    rep = check_five_jumps(NEAR_GRID)
    assert rep.passed
    assert any("hypothesis fails" in n for n in rep.notes)
    assert "alpha* for m=1..6: [2, 3, 4, 5, 6, 8]" in rep.notes


def test_grid_formula_small():
    rep = check_grid_formula(2, 3, 4)
    assert rep.passed and rep.configs_tested == 6


def test_violation_is_reported_and_replayed(monkeypatch):
    # pretend nothing is a grid: genuine grids then show up as violations
    monkeypatch.setattr(verifier, "is_grid", lambda Z: (False, (), ()))
    point = affine_config([(0, 0)])
    rep = check_stagnation_implies_grid([point], 3)
    assert not rep.passed
    (v,) = rep.violations
    assert v.m == 1 and v.config == point
    assert replay(rep, v)
    doc = rep.to_dict()
    assert doc["violations"][0]["m"] == 1
    assert doc["violations"][0]["config"]["points"]


def test_run_suite_empty_corpus():
    reports = run_suite(EnumSpec.box(2, (3, 2)), 2, grid_max=(1, 1, 2))
    names = [r.check_name for r in reports]
    assert names[:5] == [
        "stagnation_implies_grid",
        "no_double_stagnation",
        "chudnovsky",
        "alpha_plus_jump1",
        "grid_formula",
    ]
    assert "worked_examples" in names
    assert all(r.passed for r in reports)
    assert reports[0].configs_tested == 0


def test_run_suite_reports_errors():
    reports = run_suite([affine_config([(0, 0)])], 0, regressions=False, grid_max=(1, 1, 1))
    assert reports[0].error and not reports[0].passed


def test_parallel_matches_serial():
    spec = EnumSpec.box(3, (2, 3))
    one = run_suite(spec, 3, jobs=1, regressions=False, grid_max=(2, 2, 3))
    two = run_suite(spec, 3, jobs=2, regressions=False, grid_max=(2, 2, 3))
    assert [r.to_dict() for r in one] == [r.to_dict() for r in two]
