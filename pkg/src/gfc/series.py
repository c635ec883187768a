"""Exact polynomials in x and truncated power series in t with polynomial coefficients.

Scalars are :class:`fractions.Fraction`, which keeps every value in lowest
terms with a positive denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NonzeroConstantTerm

Scalar = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial; ``coeffs[i]`` is the coefficient of x**i.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Poly:
        return cls((0,) * n + (c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __mul__(self, other: Union[Poly, Scalar]) -> Poly:
        if not isinstance(other, Poly):
            c = Fraction(other)
            if c == 0:
                return Poly()
            return Poly(tuple(a * c for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
        return Poly(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> Poly:
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Poly((ZERO,) * k + self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def poly_derivative(p: Poly) -> Poly:
    return Poly(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


@dataclass(frozen=True)
class TruncSeries:
    """Series sum_{n<=order} coeffs[n](x) t**n; terms beyond ``order`` are unknown, not zero."""

    coeffs: tuple[Poly, ...]
    order: int

    def __post_init__(self):
        cs = tuple(c if isinstance(c, Poly) else Poly.const(c) for c in self.coeffs)
        if len(cs) > self.order + 1:
            cs = cs[: self.order + 1]
        cs = cs + (Poly(),) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_scalars(cls, values: Sequence[Scalar], order: int) -> TruncSeries:
        return cls(tuple(Poly.const(v) for v in values), order)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} up to {order}")
        return TruncSeries(self.coeffs[: order + 1], order)

    def __add__(self, other: TruncSeries) -> TruncSeries:
        order = min(self.order, other.order)
        return TruncSeries(tuple(a + b for a, b in zip(self.coeffs[: order + 1], other.coeffs)), order)


def series_mul(a: TruncSeries, b: TruncSeries, order: int) -> TruncSeries:
    """Cauchy product of ``a`` and ``b`` truncated after t**order."""
    if a.order < order or b.order < order:
        raise ValueError(f"operands known to orders {a.order}, {b.order}; need {order}")
    out = [Poly()] * (order + 1)
    for i in range(order + 1):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(order + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return TruncSeries(tuple(out), order)


def series_compose_outer(alpha: Sequence[Scalar], u: TruncSeries, order: int) -> TruncSeries:
    """Return sum_k alpha[k] * u**k truncated after t**order.

    Horner's scheme in ``u``: since u has no t**0 term, each multiplication
    pushes the unknown tail past ``order`` and the truncation is exact.
    """
    if u.coeffs[0]:
        raise NonzeroConstantTerm(f"u(x, 0) = {u.coeffs[0]} is not zero")
    if len(alpha) < order + 1:
        raise ValueError(f"need alpha_0..alpha_{order}, got {len(alpha)} values")
    u = u.truncate(order)
    acc = TruncSeries.from_scalars([alpha[order]], order)
    for k in range(order - 1, -1, -1):
        acc = series_mul(acc, u, order)
        head = acc.coeffs[0] + Poly.const(alpha[k])
        acc = TruncSeries((head,) + acc.coeffs[1:], order)
    return acc
