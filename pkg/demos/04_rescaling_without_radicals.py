"""
Rescaling without square roots
==============================

With R_2 = T1 the generated polynomials are k^n Q_n(x/k) for a classical
monic family Q and k^2 = 2 T1/lambda2.  Because the sets are symmetric, only
k^2 is needed: the x^(n-2j) coefficient picks up a factor (k^2)^j.
"""

from fractions import Fraction

from gfc import FamilyParams, GenFunSpec, expand, family_alpha, verify_rescaling
from gfc.families import reference_polys

params = FamilyParams.ultraspherical(3, 2, Fraction(1, 4))  # lambda = 3/2, k^2 = 1/4
ps = expand(GenFunSpec.build(family_alpha(params, 6), {2: params.t1}, 6))
ref = reference_polys(params.kind, 6, params.lam)

for n in range(7):
    print(f"n={n}:  generated {ps[n]}\n       reference {ref[n]}")

print("rescaling verified:", verify_rescaling(ps, params))
print("against Hermite   :", verify_rescaling(ps, FamilyParams.hermite(1, params.scale_sq)))
