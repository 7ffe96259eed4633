"""
Bounds on the Waldschmidt constant
==================================
"""

from fatpoints import affine_config, grid_config, waldschmidt_bounds
from fatpoints.configfile import grid_minus_point

for name, Z in [
    ("point", affine_config([(0, 0)])),
    ("(2,3)-grid", grid_config(range(2), range(3))),
    ("5x5 grid minus a point", grid_minus_point(5)),
]:
    W = waldschmidt_bounds(Z, "star", 4, modp=1_000_003)
    print(f"{name:24} {W.lower} <= gamma* <= {W.upper}")
