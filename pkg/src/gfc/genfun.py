"""Monic polynomial sets generated by F(xt - R(t)).

``R`` is stored through the coefficients R_n of R(t) = sum_{n>=1} R_n t**n / n,
so the t**2 coefficient of R is R_2 / 2.  ``r_coeffs[0]`` holds R_1.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

from .errors import OrderExceeded, ZeroAlpha
from .series import Poly, TruncSeries, poly_derivative, series_compose_outer


@dataclass(frozen=True)
class GenFunSpec:
    alpha: tuple[Fraction, ...]
    r_coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        alpha = tuple(Fraction(a) for a in self.alpha)
        r = tuple(Fraction(v) for v in self.r_coeffs)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "r_coeffs", r)
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if len(alpha) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} alpha values, got {len(alpha)}")
        if len(r) != self.order:
            raise ValueError(f"expected {self.order} R values (R_1..R_{self.order}), got {len(r)}")
        if alpha[0] != 1:
            raise ValueError("alpha_0 must be 1")
        if r[0] != 0:
            raise ValueError("R_1 must be 0")

    @classmethod
    def build(cls, alpha: Sequence, r: dict[int, object] | Sequence, order: int) -> GenFunSpec:
        """Convenience constructor.

        ``alpha`` may be longer than needed (it is cut to order+1); ``r`` is
        either the full R_1..R_N list or a sparse ``{n: R_n}`` mapping.
        """
        if isinstance(r, dict):
            rs = [Fraction(0)] * order
            for n, v in r.items():
                if 1 <= n <= order:
                    rs[n - 1] = Fraction(v)
        else:
            rs = list(r)[:order]
        return cls(tuple(alpha)[: order + 1], tuple(rs), order)

    def r(self, n: int) -> Optional[Fraction]:
        """R_n, or None when n lies beyond the truncation."""
        if 1 <= n <= self.order:
            return self.r_coeffs[n - 1]
        return None

    def with_r(self, n: int, value) -> GenFunSpec:
        rs = list(self.r_coeffs)
        rs[n - 1] = Fraction(value)
        return replace(self, r_coeffs=tuple(rs))

    def with_alpha(self, n: int, value) -> GenFunSpec:
        al = list(self.alpha)
        al[n] = Fraction(value)
        return replace(self, alpha=tuple(al))

    def inner_series(self) -> TruncSeries:
        """u(x, t) = x t - R(t) as a truncated series."""
        coeffs = [Poly()]
        for n in range(1, self.order + 1):
            c = Poly.const(-self.r_coeffs[n - 1] / n)
            if n == 1:
                c = c + Poly.x()
            coeffs.append(c)
        return TruncSeries(tuple(coeffs), self.order)


@dataclass(frozen=True)
class PolySeq:
    polys: tuple[Poly, ...]

    @property
    def order(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def truncate(self, n_max: int) -> PolySeq:
        return PolySeq(self.polys[: n_max + 1])


def expand(spec: GenFunSpec) -> PolySeq:
    """P_n = [t**n] F(xt - R(t)) / alpha_n for n = 0..order."""
    for n in range(1, spec.order + 1):
        if spec.alpha[n] == 0:
            raise ZeroAlpha(n)
    w = series_compose_outer(spec.alpha, spec.inner_series(), spec.order)
    polys = tuple(w[n] * (1 / spec.alpha[n]) for n in range(spec.order + 1))
    return PolySeq(polys)


@dataclass
class IdentityReport:
    """Per-index residuals of a polynomial identity; passes iff all are zero."""

    name: str
    residuals: dict[int, Poly] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(not r for r in self.residuals.values())

    @property
    def failures(self) -> list[int]:
        return [n for n, r in sorted(self.residuals.items()) if r]

    @property
    def first_failure(self) -> Optional[int]:
        f = self.failures
        return f[0] if f else None


def gf7_residual(spec: GenFunSpec, ps: PolySeq, n: int) -> Poly:
    """alpha_n x P_n' - sum_{k=1}^{n} R_{k+1} alpha_{n-k} P_{n-k}' - n alpha_n P_n."""
    al = spec.alpha
    d = [poly_derivative(ps[m]) for m in range(n + 1)]
    res = d[n].shift() * al[n] - ps[n] * (n * al[n])
    for k in range(1, n + 1):
        dp = d[n - k]
        if not dp:
            # only k = n (P_0' = 0), where R_{n+1} may be past the truncation
            continue
        rk = spec.r(k + 1)
        if rk is None:
            raise OrderExceeded(f"R_{k + 1} is needed at n={n} but only R_1..R_{spec.order} are known")
        if rk:
            res = res - dp * (rk * al[n - k])
    return res


def verify_gf7(spec: GenFunSpec, ps: PolySeq, n_max: Optional[int] = None) -> IdentityReport:
    """Check the first-order differential identity tying P_n, P_n' and R for 1 <= n <= n_max.

    Defaults to ``n_max = order - 1``.  At ``n = order`` the only term needing
    R_{order+1} multiplies P_0' = 0, so that index is also allowed.
    """
    if n_max is None:
        n_max = spec.order - 1
    if n_max > spec.order or n_max > ps.order:
        raise OrderExceeded(f"n_max={n_max} exceeds order {min(spec.order, ps.order)}")
    report = IdentityReport("gf7")
    for n in range(1, n_max + 1):
        report.residuals[n] = gf7_residual(spec, ps, n)
    return report


def is_symmetric(ps: PolySeq) -> bool:
    """True iff P_n(-x) = (-1)**n P_n(x) for every n."""
    for n, p in enumerate(ps):
        if any(c for i, c in enumerate(p.coeffs) if (n - i) % 2):
            return False
    return True
