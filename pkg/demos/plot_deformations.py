"""
Deforming along an H^2 class
============================

The classes of psi^{2k+1}_{2,2k+1} span H^2. Adding t times one of them
to the law gives another member of the family, and psi o psi vanishes
identically, so the rim map is zero.
"""

from fractions import Fraction

from liecoh import build_F, catalogue_cocycle, linear_deformation, nr_square, params
from liecoh.family import omega_report

par = params(3, [2, 7])
g = build_F(par)
psi = catalogue_cocycle(par, "psi_2,2k+1^2k+1", k=1)
print("psi o psi is zero:", nr_square(g, psi).is_zero())

for t in (Fraction(1), Fraction(1, 2), Fraction(-3)):
    h = linear_deformation(g, psi, t)
    target = par.shifted(1, t)
    print(f"t={t}:", h.same_structure(build_F(target)), "->", target, "|", "; ".join(omega_report(target).lines()))
