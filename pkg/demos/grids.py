"""
Grids and their jump functions
==============================

For an (a,b)-grid alpha* follows a two-counter recursion, and the grid can
be read back off its jumps.
"""

from fatpoints import alpha_sequence, grid_config, jumps_from_alphas, recover_grid
from fatpoints.invariants import grid_steps

a, b = 2, 3
for s in grid_steps(a, b, 8)[1:]:
    print(f"m={s.m}  a_m={s.a_m}  b_m={s.b_m}  alpha*={s.alpha}")

# the same numbers from linear algebra on the explicit grid
G = grid_config(range(a), range(b))
computed = alpha_sequence(G, 8, modp=1_000_003)
print(computed)

J = jumps_from_alphas(computed)
print("jumps", J.values, "-> grid", recover_grid(J))
