"""
Sweeping small configurations
=============================

Every subset of a 2x2 box and a 3x3 box with up to three points, with the
structural checks on alpha* and alpha+.
"""

from fatpoints.verifier import EnumSpec, run_suite

spec = [EnumSpec.box(2, (1, 4)), EnumSpec.box(3, (1, 3), symmetry=True)]
for rep in run_suite(spec, 3, grid_max=(3, 3, 4)):
    status = "ok" if rep.passed else "FAIL"
    print(f"{rep.check_name:32} {rep.configs_tested:5}  {status}")
    for note in rep.notes:
        print("    ", note)
