"""Rescaled monic ultraspherical, Chebyshev (first kind) and Hermite families.

A family is pinned down by (lambda1, lambda2) from the alpha recursion

    alpha_n = (lambda2 (n-1) + lambda1) / n * alpha_{n-1},   n >= 2

and by T1 = R_2.  The generated polynomials equal k**n Q_n(x/k) for the
classical monic family Q, with k**2 = 2 T1/lambda2 (ultraspherical,
Chebyshev) or T1/lambda1 (Hermite).  Everything below works with k**2 only,
so no square roots ever appear.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import InvalidParams, ParityViolation, SingularIndex
from .genfun import PolySeq, is_symmetric
from .series import Poly


class Kind(str, enum.Enum):
    MONOMIAL = "monomial"
    ULTRASPHERICAL = "ultraspherical"
    CHEBYSHEV1 = "chebyshev1"
    HERMITE = "hermite"


@dataclass(frozen=True)
class FamilyParams:
    kind: Kind
    lambda1: Fraction = Fraction(0)
    lambda2: Fraction = Fraction(0)
    t1: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        for name in ("lambda1", "lambda2", "t1"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        l1, l2 = self.lambda1, self.lambda2
        if self.kind is Kind.MONOMIAL:
            return
        if self.t1 == 0:
            raise InvalidParams("T1 = R_2 must be nonzero")
        if self.kind is Kind.ULTRASPHERICAL:
            if l1 == 0 or l2 == 0:
                raise InvalidParams("ultraspherical needs lambda1 != 0 and lambda2 != 0")
            lam = l1 / l2
            if lam.denominator == 1 and lam < 0:
                raise InvalidParams(f"lambda = {lam} is a negative integer")
        elif self.kind is Kind.CHEBYSHEV1:
            if l1 != 0 or l2 == 0:
                raise InvalidParams("chebyshev1 needs lambda1 = 0 and lambda2 != 0")
        elif self.kind is Kind.HERMITE:
            if l2 != 0 or l1 == 0:
                raise InvalidParams("hermite needs lambda2 = 0 and lambda1 != 0")

    @classmethod
    def ultraspherical(cls, lambda1, lambda2, t1=1) -> FamilyParams:
        return cls(Kind.ULTRASPHERICAL, lambda1, lambda2, t1)

    @classmethod
    def chebyshev1(cls, lambda2, t1=1) -> FamilyParams:
        return cls(Kind.CHEBYSHEV1, 0, lambda2, t1)

    @classmethod
    def hermite(cls, lambda1, t1=1) -> FamilyParams:
        return cls(Kind.HERMITE, lambda1, 0, t1)

    @classmethod
    def monomial(cls) -> FamilyParams:
        return cls(Kind.MONOMIAL)

    @classmethod
    def from_lambdas(cls, lambda1, lambda2, t1) -> FamilyParams:
        """Dispatch on which of lambda1, lambda2 vanish."""
        lambda1, lambda2 = Fraction(lambda1), Fraction(lambda2)
        if lambda1 and lambda2:
            return cls.ultraspherical(lambda1, lambda2, t1)
        if lambda2:
            return cls.chebyshev1(lambda2, t1)
        if lambda1:
            return cls.hermite(lambda1, t1)
        raise InvalidParams("lambda1 and lambda2 cannot both vanish")

    @property
    def lam(self) -> Optional[Fraction]:
        """lambda1/lambda2, only for the ultraspherical case."""
        if self.kind is Kind.ULTRASPHERICAL:
            return self.lambda1 / self.lambda2
        return None

    @property
    def scale_sq(self) -> Optional[Fraction]:
        if self.kind in (Kind.ULTRASPHERICAL, Kind.CHEBYSHEV1):
            return 2 * self.t1 / self.lambda2
        if self.kind is Kind.HERMITE:
            return self.t1 / self.lambda1
        return None

    def unit_scale(self) -> FamilyParams:
        """Same lambdas with T1 chosen so that scale_sq = 1."""
        if self.kind is Kind.MONOMIAL:
            return self
        if self.kind is Kind.HERMITE:
            return FamilyParams(self.kind, self.lambda1, self.lambda2, self.lambda1)
        return FamilyParams(self.kind, self.lambda1, self.lambda2, self.lambda2 / 2)


def alphan_sequence(lambda1, lambda2, n_max: int, alpha1=1) -> list[Fraction]:
    """alpha_0..alpha_{n_max} with alpha_0 = 1 and the lambda recursion from n = 2."""
    lambda1, lambda2 = Fraction(lambda1), Fraction(lambda2)
    out = [Fraction(1)]
    if n_max >= 1:
        out.append(Fraction(alpha1))
    for n in range(2, n_max + 1):
        out.append((lambda2 * (n - 1) + lambda1) / n * out[-1])
    return out


def family_alpha(params: FamilyParams, n_max: int, alpha1=1) -> list[Fraction]:
    if params.kind is Kind.MONOMIAL:
        return [Fraction(1)] * (n_max + 1)
    if alpha1 == 0:
        raise InvalidParams("alpha_1 must be nonzero")
    return alphan_sequence(params.lambda1, params.lambda2, n_max, alpha1)


def family_omega(params: FamilyParams, n: int) -> Fraction:
    """omega_n = (T1/2) n (lambda2 (n-1) + 2 lambda1) / ((lambda2 n + lambda1)(lambda2 (n-1) + lambda1))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if params.kind is Kind.MONOMIAL:
        return Fraction(0)
    l1, l2 = params.lambda1, params.lambda2
    den = (l2 * n + l1) * (l2 * (n - 1) + l1)
    if den == 0:
        raise SingularIndex(n)
    return params.t1 / 2 * n * (l2 * (n - 1) + 2 * l1) / den


def family_omega_gf10(params: FamilyParams, n: int) -> Fraction:
    """omega_n = n a_n - (n-1) a_{n-1} with a_m = (T1/2)(m+1)/(lambda2 m + lambda1).

    a_m only depends on the ratio alpha_m/alpha_{m+1}, so alpha_1 drops out.
    Used where the closed form is 0/0 (Chebyshev at n = 1).
    """
    l1, l2, t1 = params.lambda1, params.lambda2, params.t1

    def a(m):
        return t1 / 2 * (m + 1) / (l2 * m + l1)

    return n * a(n) - ((n - 1) * a(n - 1) if n > 1 else 0)


def family_omega_safe(params: FamilyParams, n: int) -> Fraction:
    try:
        return family_omega(params, n)
    except SingularIndex:
        return family_omega_gf10(params, n)


def _ttrr_polys(omegas: list[Fraction], n_max: int) -> PolySeq:
    x = Poly.x()
    polys = [Poly.const(1), x][: n_max + 1]
    for n in range(1, n_max):
        polys.append(x * polys[n] - polys[n - 1] * omegas[n - 1])
    return PolySeq(tuple(polys))


@lru_cache(maxsize=256)
def family_polys(params: FamilyParams, n_max: int) -> PolySeq:
    """The rescaled monic family P_0..P_{n_max}, built from beta_n = 0 and omega_n."""
    if params.kind is Kind.MONOMIAL:
        return PolySeq(tuple(Poly.monomial(n) for n in range(n_max + 1)))
    omegas = [family_omega_safe(params, n) for n in range(1, n_max)]
    return _ttrr_polys(omegas, n_max)


def classical_omega(kind: Kind, n: int, lam: Optional[Fraction] = None) -> Fraction:
    """Textbook monic recurrence coefficients at unit scale.

    Gegenbauer n(n + 2 lam - 1)/(4 (n + lam)(n + lam - 1)); Chebyshev 1/2
    then 1/4; Hermite n.
    """
    if kind is Kind.ULTRASPHERICAL:
        return Fraction(n * (n + 2 * lam - 1)) / (4 * (n + lam) * (n + lam - 1))
    if kind is Kind.CHEBYSHEV1:
        return Fraction(1, 2) if n == 1 else Fraction(1, 4)
    if kind is Kind.HERMITE:
        return Fraction(n)
    return Fraction(0)


@lru_cache(maxsize=256)
def reference_polys(kind: Kind, n_max: int, lam: Optional[Fraction] = None) -> PolySeq:
    if kind is Kind.MONOMIAL:
        return PolySeq(tuple(Poly.monomial(n) for n in range(n_max + 1)))
    return _ttrr_polys([classical_omega(kind, n, lam) for n in range(1, n_max)], n_max)


def verify_rescaling(ps: PolySeq, params: FamilyParams) -> bool:
    """Coefficientwise P_n[x^(n-2j)] == scale_sq**j * Q_n[x^(n-2j)] for the classical Q."""
    if not is_symmetric(ps):
        raise ParityViolation("given sequence is not symmetric")
    ref = reference_polys(params.kind, ps.order, params.lam)
    if not is_symmetric(ref):
        raise ParityViolation("reference sequence is not symmetric")
    if params.kind is Kind.MONOMIAL:
        return ps.polys == ref.polys
    k2 = params.scale_sq
    for n, (p, q) in enumerate(zip(ps, ref)):
        if p.degree != n:
            return False
        for j in range(n // 2 + 1):
            if p[n - 2 * j] != k2**j * q[n - 2 * j]:
                return False
    return True


class OrthoReason(str, enum.Enum):
    ULTRA_OK = "lambda2/T1 > 0 and lambda > -1/2"
    ULTRA_RATIO = "ultraspherical: lambda2/T1 <= 0"
    ULTRA_LAMBDA = "ultraspherical: lambda <= -1/2"
    CHEB_OK = "lambda2/T1 > 0"
    CHEB_RATIO = "chebyshev1: lambda2/T1 <= 0"
    HERMITE_OK = "lambda1/T1 > 0"
    HERMITE_RATIO = "hermite: lambda1/T1 <= 0"
    MONOMIAL = "monomial: omega_n = 0"


@dataclass(frozen=True)
class OrthogonalityVerdict:
    """Sufficient conditions only; a negative verdict does not prove non-orthogonality."""

    orthogonal: bool
    reason: OrthoReason


def check_orthogonality(params: FamilyParams) -> OrthogonalityVerdict:
    k = params.kind
    if k is Kind.ULTRASPHERICAL:
        if params.lambda2 / params.t1 <= 0:
            return OrthogonalityVerdict(False, OrthoReason.ULTRA_RATIO)
        if params.lam <= Fraction(-1, 2):
            return OrthogonalityVerdict(False, OrthoReason.ULTRA_LAMBDA)
        return OrthogonalityVerdict(True, OrthoReason.ULTRA_OK)
    if k is Kind.CHEBYSHEV1:
        ok = params.lambda2 / params.t1 > 0
        return OrthogonalityVerdict(ok, OrthoReason.CHEB_OK if ok else OrthoReason.CHEB_RATIO)
    if k is Kind.HERMITE:
        ok = params.lambda1 / params.t1 > 0
        return OrthogonalityVerdict(ok, OrthoReason.HERMITE_OK if ok else OrthoReason.HERMITE_RATIO)
    return OrthogonalityVerdict(False, OrthoReason.MONOMIAL)
