"""
Classifying generating functions
================================

Three F's with R(t) = t^2/2, plus a monomial case, run through the
classifier.  The certificate flags are exact checks, never tolerances.
"""

from fractions import Fraction
from math import factorial

from gfc import GenFunSpec, check_orthogonality, classify
from gfc.families import alphan_sequence

order = 12
cases = {
    "exp(t)": [Fraction(1, factorial(n)) for n in range(order + 1)],
    "(1-2t)^(-1/2)": alphan_sequence(1, 2, order),
    "1 + ln(1/(1-2t))/2": alphan_sequence(0, 2, order),
}

for name, alpha in cases.items():
    c = classify(GenFunSpec.build(alpha, {2: 1}, order))
    p = c.params
    print(f"F = {name:20s} -> {c.verdict.value:15s} lambda1={p.lambda1} lambda2={p.lambda2} k^2={p.scale_sq}")
    print("   omega_1..5:", [str(w) for w in c.recurrence.omegas[:5]])
    print("   orthogonal (sufficient test):", check_orthogonality(p).orthogonal)
    print("   certificate:", c.certificate.flags())

# %%
# With R = 0 any F gives the monomials
c = classify(GenFunSpec.build([1, 3, Fraction(-2, 5), 7, 1, 1, 2, 9], {}, 7))
print("R = 0 ->", c.verdict.value)
