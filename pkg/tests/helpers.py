"""Independent oracles (sympy) and hypothesis strategies shared by the tests.

Nothing here touches the library's series machinery: expansions go through
sympy's own series arithmetic, and classical families come from sympy's
special-polynomial constructors.
"""
from fractions import Fraction
from math import factorial

import sympy as sp
from hypothesis import strategies as st

from gfc.families import Kind
from gfc.genfun import GenFunSpec

X, T = sp.symbols("x t")


def to_frac(c) -> Fraction:
    c = sp.Rational(c)
    return Fraction(int(c.p), int(c.q))


def coeff_list(expr) -> list:
    """Coefficients of a polynomial in X, low degree first, trailing zeros dropped."""
    p = sp.Poly(sp.expand(expr), X)
    out = [to_frac(c) for c in reversed(p.all_coeffs())]
    while out and out[-1] == 0:
        out.pop()
    return out


def sympy_expand(alpha, r: dict, order: int) -> list:
    """P_n = [t^n] sum_k alpha_k (x t - sum R_n t^n / n)^k / alpha_n via sympy."""
    u = X * T - sum(sp.Rational(str(Fraction(v))) * T**n / n for n, v in r.items() if n <= order)
    w = sum(sp.Rational(str(Fraction(alpha[k]))) * u**k for k in range(order + 1))
    w = sp.Poly(sp.expand(w), T)
    out = []
    for n in range(order + 1):
        c = w.coeff_monomial(T**n)
        out.append(coeff_list(c / sp.Rational(str(Fraction(alpha[n])))))
    return out


def gf5_residual_coeffs(alpha, r: dict, polys, order: int) -> list:
    """t^n coefficients (n < order) of (x - R'(t)) W_x - t W_t for W = sum alpha_n P_n t^n."""
    w = sum(
        sp.Rational(str(alpha[n])) * sum(sp.Rational(str(c)) * X**i for i, c in enumerate(polys[n])) * T**n
        for n in range(order + 1)
    )
    rprime = sum(sp.Rational(str(Fraction(v))) * T ** (n - 1) for n, v in r.items())
    expr = sp.expand((X - rprime) * sp.diff(w, X) - T * sp.diff(w, T))
    p = sp.Poly(expr, T)
    return [sp.expand(p.coeff_monomial(T**n)) for n in range(order)]


def monic_classical(kind: Kind, n: int, lam=None):
    if kind is Kind.HERMITE:
        q = sp.hermite_prob(n, X)
    elif kind is Kind.CHEBYSHEV1:
        q = sp.chebyshevt(n, X)
    elif kind is Kind.ULTRASPHERICAL:
        q = sp.gegenbauer(n, sp.Rational(str(lam)), X)
    else:
        q = X**n
    q = sp.expand(q)
    return sp.expand(q / sp.Poly(q, X).LC())


def rescaled_classical(kind: Kind, n: int, scale_sq, lam=None) -> list:
    """k^n Q_n(x/k) with k = sqrt(scale_sq), computed with real radicals."""
    k = sp.sqrt(sp.Rational(str(scale_sq)))
    q = monic_classical(kind, n, lam)
    return coeff_list(sp.simplify(sp.expand(k**n * q.subs(X, X / k))))


def classical_hermite_ttrr(order: int) -> list:
    """Monic Hermite via P_{n+1} = x P_n - n P_{n-1}, as coefficient lists."""
    polys = [[Fraction(1)], [Fraction(0), Fraction(1)]]
    for n in range(1, order):
        a, b = polys[n], polys[n - 1]
        nxt = [Fraction(0)] + list(a)
        for i, c in enumerate(b):
            nxt[i] -= n * c
        polys.append(nxt)
    return polys[: order + 1]


def exp_alpha(order: int) -> list:
    return [Fraction(1, factorial(n)) for n in range(order + 1)]


def cheb_alpha(order: int) -> list:
    return [Fraction(1)] + [Fraction(2 ** (n - 1), n) for n in range(1, order + 1)]


def legendre_alpha(order: int) -> list:
    """Taylor coefficients of (1 - 2t)^(-1/2), from sympy."""
    s = sp.series((1 - 2 * T) ** sp.Rational(-1, 2), T, 0, order + 1).removeO()
    return [to_frac(sp.Poly(s, T).coeff_monomial(T**n)) for n in range(order + 1)]


def hermite_spec(order: int) -> GenFunSpec:
    return GenFunSpec.build(exp_alpha(order), {2: 1}, order)


def cheb_spec(order: int) -> GenFunSpec:
    return GenFunSpec.build(cheb_alpha(order), {2: 1}, order)


def legendre_spec(order: int) -> GenFunSpec:
    return GenFunSpec.build(legendre_alpha(order), {2: 1}, order)


small_q = st.fractions(min_value=-4, max_value=4, max_denominator=6)
nonzero_q = small_q.filter(lambda q: q != 0)


@st.composite
def random_specs(draw, order=None, max_order=8, r_max_index=None, allow_odd=True):
    """Random valid GenFunSpec: alpha_0 = 1, alpha_n != 0, R_1 = 0."""
    n = order if order is not None else draw(st.integers(min_value=2, max_value=max_order))
    alpha = [Fraction(1)] + [draw(nonzero_q) for _ in range(n)]
    top = n if r_max_index is None else min(n, r_max_index)
    r = {}
    for k in range(2, top + 1):
        if not allow_odd and k % 2:
            continue
        r[k] = draw(small_q)
    return GenFunSpec.build(alpha, r, n)
