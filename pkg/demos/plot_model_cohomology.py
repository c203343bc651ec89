"""
Cohomology of a model algebra
=============================

Build F(3, (2, 7)), compute its derivations and its first two adjoint
cohomology spaces, then split Z^2 by weight.
"""

from liecoh import build_F, derivations, h_dim, params
from liecoh.cohomology import coboundary_space, cocycle_space, graded_spaces
from liecoh.family import family_grading

par = params(3, [2, 7])
g = build_F(par)
print(g)

# Der has dimension 3p - 1 away from the exceptional hyperplanes
print("dim Der =", derivations(g).dim)
print("dim H1  =", h_dim(g, 1))
print("dim H2  =", h_dim(g, 2))

# the totals and their weight decomposition
z2, b2 = cocycle_space(g, 2), coboundary_space(g, 2)
print("dim Z2 =", z2.dim, " dim B2 =", b2.dim)

for w, (z, b) in sorted(graded_spaces(g, family_grading(3), 2).items()):
    print(f"weight {w:+d}:  Z {z.dim:2d}  B {b.dim:2d}  equal={z == b}")
