"""
The derivation algebra
======================

Der(F_phi) is complete and 3-step solvable, and its isomorphism class does
not depend on phi.
"""

from liecoh import build_Der_F, center, h_dim, is_isomorphism_witness, params, solvable_steps
from liecoh.family import der_basis_change, der_identification

a, b = params(3, [2, 7]), params(3, [4, 13])
d = build_Der_F(a)
print("dim", d.dim, "center", center(d).dim, "H1", h_dim(d, 1), "steps", solvable_steps(d))

# the table built from Maurer-Cartan equations matches the computed Der
print("matches computed Der:", der_identification(a))

# shifting X2 by the torus part carries one table onto the other
P = der_basis_change(a, b)
print("isomorphism:", is_isomorphism_witness(d, build_Der_F(b), P))
