"""
Exceptional parameters
======================

On the hyperplanes of Omega the dimension counts can jump. On phi_1 = phi_2
the algebra picks up extra derivations.
"""

from liecoh import model_verification_suite, omega_report, params

for phi in ([2, 7], [1, 2], [5, 5]):
    par = params(3, phi)
    print(par, "|", "; ".join(omega_report(par).lines()))

rep = model_verification_suite(params(3, [5, 5]))
print(rep.to_text())
