"""
Initial degrees of symbolic powers
==================================

alpha* looks only at square bi-degrees (k,k); alpha+ at any split of k.
"""

from fatpoints import alpha_sequence, jump_vector
from fatpoints.configfile import NEAR_GRID, SIX_POINTS

# three corners of a square and one point at infinity
print("alpha*:", alpha_sequence(NEAR_GRID, 6, "star"))
print("jumps :", jump_vector(NEAR_GRID, 6).values)

# six affine points; alpha+ grows by at least 2 here because they lie on no fiber
print("alpha+:", alpha_sequence(SIX_POINTS, 3, "plus"))

# modular screening gives the same values, confirmed over Q
print("alpha+ (mod p):", alpha_sequence(SIX_POINTS, 3, "plus", modp=1_000_003))
