"""
Expanding a generating function and reading off its recurrence
==============================================================

F(t) = exp(t) and R(t) = t^2/2 give the monic Hermite polynomials.
"""

from fractions import Fraction
from math import factorial

from gfc import GenFunSpec, expand, extract_ttrr, verify_gf7

# R is given through R_n in R(t) = sum R_n t^n / n, so R_2 = 1 means t^2/2
order = 8
spec = GenFunSpec.build([Fraction(1, factorial(n)) for n in range(order + 1)], {2: 1}, order)

ps = expand(spec)
for n, p in enumerate(ps):
    print(f"P_{n}(x) = {p}")

# %%
# The sequence satisfies x P_n = P_{n+1} + beta_n P_n + omega_n P_{n-1}
rec = extract_ttrr(ps)
print("beta :", [str(b) for b in rec.betas])
print("omega:", [str(w) for w in rec.omegas])

# %%
# Every set generated this way obeys a first-order differential identity,
# recurrence or not.  The report holds one residual polynomial per n.
print("differential identity holds:", verify_gf7(spec, ps).ok)
