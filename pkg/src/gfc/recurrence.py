"""Recurrence extraction for monic polynomial sequences, plus the coefficient
identities that a three-term recurrence forces on (alpha, R).

Coefficients are read off by matching x-degrees from the top down, so no
linear solves are needed; whatever is left over is the failure certificate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import OrderTooSmall
from .genfun import GenFunSpec, PolySeq
from .series import Poly


@dataclass
class Recurrence:
    """x P_n = P_{n+1} + beta_n P_n + omega_n P_{n-1}.

    ``betas[n]`` is beta_n (from n = 0); ``omegas[n - 1]`` is omega_n (from
    n = 1).  Entries are reported up to and including the failing row.
    """

    betas: list[Fraction]
    omegas: list[Fraction]
    valid_to: int
    failure: Optional[tuple[int, Poly]] = None

    def beta(self, n: int) -> Fraction:
        return self.betas[n]

    def omega(self, n: int) -> Fraction:
        return self.omegas[n - 1]

    @property
    def ok(self) -> bool:
        return self.failure is None


@dataclass
class GeneralRecurrence:
    """x P_n = P_{n+1} + sum_{l=0}^{d} gamma_n^l P_{n-l}; ``gammas[n][l]`` is gamma_n^l."""

    d: int
    gammas: list[list[Fraction]]
    valid_to: int
    failure: Optional[tuple[int, Poly]] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def _peel(ps: PolySeq, n: int, depth: int) -> tuple[list[Fraction], Poly]:
    q = ps[n].shift() - ps[n + 1]
    coeffs = []
    for l in range(min(depth, n) + 1):
        g = q[n - l]
        coeffs.append(g)
        if g:
            q = q - ps[n - l] * g
    return coeffs, q


def extract_general(ps: PolySeq, d: int) -> GeneralRecurrence:
    if d < 0:
        raise ValueError("d must be >= 0")
    top = ps.order
    if top < d + 1:
        raise OrderTooSmall(f"need order >= {d + 1}, got {top}")
    gammas: list[list[Fraction]] = []
    for n in range(top):
        row, rem = _peel(ps, n, d)
        gammas.append(row)
        if rem:
            return GeneralRecurrence(d, gammas, n - 1, (n, rem))
    return GeneralRecurrence(d, gammas, top - 1)


def extract_ttrr(ps: PolySeq) -> Recurrence:
    if ps.order < 2:
        raise OrderTooSmall(f"need order >= 2, got {ps.order}")
    g = extract_general(ps, 1)
    betas = [row[0] for row in g.gammas]
    omegas = [row[1] for row in g.gammas[1:]]
    return Recurrence(betas, omegas, g.valid_to, g.failure)


def minimal_order(ps: PolySeq, d_max: int) -> Optional[int]:
    """Smallest d in 1..d_max admitting an exact (d+1)-order recurrence, else None.

    d starts at 1: a monomial sequence is reported as a three-term recurrence
    with all-zero coefficients.
    """
    for d in range(1, min(d_max, ps.order - 1) + 1):
        if extract_general(ps, d).ok:
            return d
    return None


def replay(rec: Recurrence, n_max: int) -> PolySeq:
    """Rebuild P_0..P_{n_max} from beta/omega (needs n_max <= valid_to + 1)."""
    if n_max > rec.valid_to + 1:
        raise ValueError(f"recurrence only valid to {rec.valid_to}")
    x = Poly.x()
    polys = [Poly.const(1)]
    if n_max >= 1:
        polys.append(x - rec.beta(0))
    for n in range(1, n_max):
        polys.append((x - rec.beta(n)) * polys[n] - polys[n - 1] * rec.omega(n))
    return PolySeq(tuple(polys))


@dataclass
class DerivedSequences:
    """T_k = R_{2k}, a_n = (T_1/2) alpha_n/alpha_{n+1}, c_n = (alpha_n/alpha_{n-1}) omega_n.

    Only defined when alpha_1 R_2 != 0.  Lookups past the available data
    return None instead of padding with zeros.
    """

    spec: GenFunSpec
    rec: Recurrence

    def __post_init__(self):
        if not (self.spec.alpha[1] and self.spec.r(2)):
            raise ValueError("derived sequences need alpha_1 * R_2 != 0")

    @property
    def t1(self) -> Fraction:
        return self.spec.r(2)

    def T(self, k: int) -> Optional[Fraction]:
        return self.spec.r(2 * k)

    def a(self, n: int) -> Optional[Fraction]:
        al = self.spec.alpha
        if n < 0 or n + 1 > self.spec.order:
            return None
        return self.t1 / 2 * al[n] / al[n + 1]

    def c(self, n: int) -> Optional[Fraction]:
        if n < 1 or n > self.rec.valid_to or n > len(self.rec.omegas):
            return None
        al = self.spec.alpha
        return al[n] / al[n - 1] * self.rec.omega(n)

    def a_table(self) -> list[Fraction]:
        return [self.a(n) for n in range(self.spec.order)]

    def c_table(self) -> list[Fraction]:
        return [self.c(n) for n in range(1, self.rec.valid_to + 1)]


@dataclass
class CheckResult:
    """Outcome of one exact identity check.

    ``ok`` is None when the check does not apply (e.g. nothing in range).
    ``witnesses`` maps index -> (lhs, rhs) or a residual for failing indices.
    """

    name: str
    ok: Optional[bool]
    checked: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)


def _finish(name: str, checked: list, witnesses: dict) -> CheckResult:
    if not checked:
        return CheckResult(name, None)
    return CheckResult(name, not witnesses, checked, witnesses)


def check_gf9(rec: Recurrence) -> CheckResult:
    """beta_n = 0 for every row where the recurrence holds."""
    checked, bad = [], {}
    for n in range(rec.valid_to + 1):
        checked.append(n)
        if rec.beta(n):
            bad[n] = rec.beta(n)
    return _finish("gf9", checked, bad)


def check_gf10(ds: DerivedSequences) -> CheckResult:
    """omega_n = n a_n - (n-1) a_{n-1}."""
    checked, bad = [], {}
    for n in range(1, ds.rec.valid_to + 1):
        an = ds.a(n)
        if an is None:
            break
        rhs = n * an - ((n - 1) * ds.a(n - 1) if n > 1 else 0)
        checked.append(n)
        if ds.rec.omega(n) != rhs:
            bad[n] = (ds.rec.omega(n), rhs)
    return _finish("gf10", checked, bad)


def check_gf11(ds: DerivedSequences) -> CheckResult:
    """(4 T_2/T_1^3)(1 - ((n-3)/(n-2)) a_{n-3}/a_n) = (n+1)/a_n - 2n/a_{n-1} + (n-1)/a_{n-2}, n >= 3."""
    t1, t2 = ds.t1, ds.T(2)
    if t2 is None:
        return CheckResult("gf11", None)
    checked, bad = [], {}
    for n in range(3, ds.rec.valid_to + 1):
        an = ds.a(n)
        if an is None:
            break
        lhs = 4 * t2 / t1**3 * (1 - Fraction(n - 3, n - 2) * ds.a(n - 3) / an)
        rhs = (n + 1) / an - 2 * n / ds.a(n - 1) + (n - 1) / ds.a(n - 2)
        checked.append(n)
        if lhs != rhs:
            bad[n] = (lhs, rhs)
    return _finish("gf11", checked, bad)


def gf12_sides(ds: DerivedSequences, k: int, n: int) -> Optional[tuple[Fraction, Fraction]]:
    """Both sides of the order-k identity at index n, or None if it touches the truncation."""
    tk1, tk = ds.T(k + 1), ds.T(k)
    an, am = ds.a(n), ds.a(n - 2 * k - 1)
    cn, cm = ds.c(n), ds.c(n - 2 * k + 1)
    if None in (tk1, tk, an, am, cn, cm):
        return None
    lhs = (2 / ds.t1) * (an - Fraction(n - 2 * k - 1, n - 2 * k) * am) * tk1
    lhs += (Fraction(n + 2, n) * cn - Fraction(n - 2 * k + 1, n - 2 * k + 2) * cm) * tk
    rhs = sum((ds.T(l) * ds.T(k - l + 1) / (n - 2 * k + 2 * l) for l in range(1, k + 1)), Fraction(0))
    return lhs, rhs


def check_gf12(ds: DerivedSequences) -> CheckResult:
    checked, bad = [], {}
    k = 2
    while ds.T(k + 1) is not None:
        for n in range(2 * k + 1, ds.rec.valid_to + 1):
            sides = gf12_sides(ds, k, n)
            if sides is None:
                continue
            checked.append((k, n))
            if sides[0] != sides[1]:
                bad[(k, n)] = sides
        k += 1
    return _finish("gf12", checked, bad)


def check_solricati(ds: DerivedSequences) -> CheckResult:
    """(n+1)/a_n = (3/a_2 - 2/a_1) n + (4/a_1 - 3/a_2) for n >= 1."""
    a1, a2 = ds.a(1), ds.a(2)
    if a2 is None:
        return CheckResult("solricati", None)
    slope = 3 / a2 - 2 / a1
    icpt = 4 / a1 - 3 / a2
    checked, bad = [], {}
    for n in range(1, ds.rec.valid_to + 1):
        an = ds.a(n)
        if an is None:
            break
        checked.append(n)
        if (n + 1) / an != slope * n + icpt:
            bad[n] = ((n + 1) / an, slope * n + icpt)
    return _finish("solricati", checked, bad)
