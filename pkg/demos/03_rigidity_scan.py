"""
How fragile is the three-term recurrence?
=========================================

Start from the Hermite generating function and switch on a single higher
coefficient of R.  Any nonzero value breaks the recurrence at a small index.
"""

from fractions import Fraction
from math import factorial

from gfc import GenFunSpec, Knob, scan_perturbations

order = 14
base = GenFunSpec.build([Fraction(1, factorial(n)) for n in range(order + 1)], {2: 1}, order)

for n in (3, 4, 5, 6):
    rows = scan_perturbations(base, Knob("r", n), [0, Fraction(1, 10), 1, -7])
    cells = ", ".join(f"{row.knob_value}: {row.verdict} @ {row.first_failure_n}" for row in rows)
    print(f"R_{n}  ->  {cells}")

# %%
# Perturbing a single alpha breaks it too (alpha_5 doubled)
print(scan_perturbations(base, Knob("alpha", 5, "scale"), [2]))
