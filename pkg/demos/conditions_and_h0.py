"""
Forms through a fat point
=========================

A double point imposes three conditions on forms of bi-degree (1,1).
"""

from fatpoints import affine_config, conditions_matrix, h0, mult_at, rank, witness_form

# the point ([1:3],[1:5]) with multiplicity 2
Z = affine_config([(3, 5)], [2])
C = conditions_matrix(Z, (1, 1))
print("conditions matrix", C.matrix.shape, "rank", rank(C.matrix))
for label, row in zip(C.row_labels, C.matrix.rows):
    print(label, row)

print("h0 =", h0(Z, (1, 1)))

# the only survivor is the pair of fibers through the point
f = witness_form(Z, (1, 1))
print(f.grid_strings())
print("multiplicity at P:", mult_at(f, Z.points[0]))
