"""Decide which family (if any) a generating function F(xt - R(t)) produces.

The pipeline expands the polynomials, extracts the three-term recurrence and,
when it holds, recovers (lambda1, lambda2) from alpha_1..alpha_3 and checks
every consequence exactly.  Verdicts only speak about the coefficients that
were supplied; ``depth`` records how far that was.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import GFCError, InvalidParams, OrderTooSmall, ParityViolation
from .families import FamilyParams, Kind, alphan_sequence, family_polys, verify_rescaling
from .genfun import GenFunSpec, PolySeq, expand, is_symmetric, verify_gf7
from .recurrence import (
    DerivedSequences,
    Recurrence,
    check_gf9,
    check_gf10,
    check_gf11,
    check_gf12,
    check_solricati,
    extract_ttrr,
)

MIN_ORDER = 7

CHECK_NAMES = ("gf7", "gf9", "gf10", "gf11", "gf12", "symmetry", "solricati", "r_quadratic", "rescale")


class Verdict(str, enum.Enum):
    MONOMIAL = "monomial"
    ULTRASPHERICAL = "ultraspherical"
    CHEBYSHEV1 = "chebyshev1"
    HERMITE = "hermite"
    NOT_TTRR = "not_ttrr"
    OUTSIDE_HYPOTHESES = "outside_hypotheses"


_FAMILY_VERDICT = {
    Kind.ULTRASPHERICAL: Verdict.ULTRASPHERICAL,
    Kind.CHEBYSHEV1: Verdict.CHEBYSHEV1,
    Kind.HERMITE: Verdict.HERMITE,
    Kind.MONOMIAL: Verdict.MONOMIAL,
}


@dataclass
class CertificateBundle:
    """Exact-arithmetic check flags; None means not applicable."""

    ttrr_valid_to: int
    gf7_ok: Optional[bool] = None
    gf9_ok: Optional[bool] = None
    gf10_ok: Optional[bool] = None
    gf11_ok: Optional[bool] = None
    gf12_ok: Optional[bool] = None
    symmetry_ok: Optional[bool] = None
    solricati_ok: Optional[bool] = None
    r_quadratic_ok: Optional[bool] = None
    rescale_ok: Optional[bool] = None
    witnesses: dict = field(default_factory=dict)

    def flag(self, name: str) -> Optional[bool]:
        return getattr(self, f"{name}_ok")

    def flags(self) -> dict[str, Optional[bool]]:
        return {name: self.flag(name) for name in CHECK_NAMES}

    @property
    def green(self) -> bool:
        """No flag is False."""
        return all(v is not False for v in self.flags().values())


@dataclass
class Classification:
    verdict: Verdict
    params: Optional[FamilyParams]
    certificate: CertificateBundle
    depth: int
    polys: Optional[PolySeq] = None
    recurrence: Optional[Recurrence] = None
    notes: list[str] = field(default_factory=list)


def _ttrr_witness(rec: Recurrence) -> dict:
    n, residual = rec.failure
    return {"n": n, "residual": residual}


def run_certificate(
    spec: GenFunSpec,
    cls_hint: Optional[FamilyParams] = None,
    ps: Optional[PolySeq] = None,
    rec: Optional[Recurrence] = None,
) -> CertificateBundle:
    """Evaluate every identity check; failures are recorded, never raised.

    Checks that presuppose the three-term recurrence are marked failed (with
    the recurrence witness) when it does not hold.
    """
    ps = ps if ps is not None else expand(spec)
    rec = rec if rec is not None else extract_ttrr(ps)
    cert = CertificateBundle(ttrr_valid_to=rec.valid_to)
    w = cert.witnesses
    if rec.failure is not None:
        w["ttrr"] = _ttrr_witness(rec)

    gf7 = verify_gf7(spec, ps)
    cert.gf7_ok = gf7.ok
    if not gf7.ok:
        n = gf7.first_failure
        w["gf7"] = {"n": n, "residual": gf7.residuals[n]}

    odd_r = {n: spec.r(n) for n in range(3, spec.order + 1, 2) if spec.r(n)}
    cert.symmetry_ok = is_symmetric(ps) and not odd_r
    if not cert.symmetry_ok:
        w["symmetry"] = {"odd_r": odd_r, "polys_symmetric": is_symmetric(ps)}

    high_r = {n: spec.r(n) for n in range(3, spec.order + 1) if spec.r(n)}
    cert.r_quadratic_ok = not high_r
    if high_r:
        w["r_quadratic"] = {"nonzero": high_r}

    ttrr_dependent = ["gf9", "gf10", "gf11", "gf12", "solricati"]
    if rec.failure is not None:
        for name in ttrr_dependent:
            setattr(cert, f"{name}_ok", False)
            w[name] = {"reason": "three-term recurrence fails", **_ttrr_witness(rec)}
    else:
        r9 = check_gf9(rec)
        cert.gf9_ok = r9.ok
        if r9.witnesses:
            w["gf9"] = r9.witnesses
        if spec.alpha[1] and spec.r(2):
            ds = DerivedSequences(spec, rec)
            for check in (check_gf10, check_gf11, check_gf12, check_solricati):
                res = check(ds)
                setattr(cert, f"{res.name}_ok", res.ok)
                if res.witnesses:
                    w[res.name] = res.witnesses

    if cls_hint is not None:
        try:
            cert.rescale_ok = verify_rescaling(ps, cls_hint)
        except ParityViolation as exc:
            cert.rescale_ok = False
            w["rescale"] = {"reason": str(exc)}
        if cert.rescale_ok is False and "rescale" not in w:
            w["rescale"] = {"reason": f"does not match rescaled {cls_hint.kind.value}"}
    return cert


def recover_lambdas(alpha: Sequence[Fraction]) -> tuple[Fraction, Fraction]:
    """lambda1 = 4 a2/a1 - 3 a3/a2,  lambda2 = 3 a3/a2 - 2 a2/a1."""
    a1, a2, a3 = alpha[1], alpha[2], alpha[3]
    return 4 * a2 / a1 - 3 * a3 / a2, 3 * a3 / a2 - 2 * a2 / a1


def classify(spec: GenFunSpec) -> Classification:
    if spec.order < MIN_ORDER:
        raise OrderTooSmall(f"classification needs order >= {MIN_ORDER}, got {spec.order}")
    depth = spec.order
    r2 = spec.r(2)
    all_r_zero = not any(spec.r_coeffs)

    if spec.alpha[1] == 0 and r2:
        return Classification(
            Verdict.OUTSIDE_HYPOTHESES, None, CertificateBundle(-1), depth,
            notes=["alpha_1 = 0 while R_2 != 0; the theorem assumes alpha_1 R_2 != 0"],
        )
    if all_r_zero:
        zeros = [n for n in range(1, depth + 1) if spec.alpha[n] == 0]
        if zeros:
            return Classification(
                Verdict.OUTSIDE_HYPOTHESES, None, CertificateBundle(-1), depth,
                notes=[f"R = 0 but alpha_n = 0 at n = {zeros}; monomial case needs every alpha_n != 0"],
            )

    ps = expand(spec)
    rec = extract_ttrr(ps)

    if rec.failure is not None:
        cert = run_certificate(spec, None, ps, rec)
        return Classification(Verdict.NOT_TTRR, None, cert, depth, ps, rec)

    if not r2:
        if all_r_zero:
            params = FamilyParams.monomial()
            cert = run_certificate(spec, params, ps, rec)
            return Classification(Verdict.MONOMIAL, params, cert, depth, ps, rec)
        cert = run_certificate(spec, None, ps, rec)
        return Classification(
            Verdict.OUTSIDE_HYPOTHESES, None, cert, depth, ps, rec,
            notes=["R_2 = 0 with higher R_n != 0 yet the recurrence held to this depth; "
                   "likely a truncation-depth artifact"],
        )

    notes = []
    lambda1, lambda2 = recover_lambdas(spec.alpha)
    try:
        params = FamilyParams.from_lambdas(lambda1, lambda2, r2)
    except InvalidParams as exc:
        cert = run_certificate(spec, None, ps, rec)
        return Classification(Verdict.OUTSIDE_HYPOTHESES, None, cert, depth, ps, rec, notes=[str(exc)])

    expected = alphan_sequence(lambda1, lambda2, depth, spec.alpha[1])
    bad_alpha = [n for n in range(depth + 1) if expected[n] != spec.alpha[n]]
    if bad_alpha:
        notes.append(f"alpha deviates from the lambda recursion at n = {bad_alpha}")

    cert = run_certificate(spec, params, ps, rec)
    if bad_alpha:
        cert.witnesses["alphan"] = {"n": bad_alpha[0], "expected": expected[bad_alpha[0]],
                                    "got": spec.alpha[bad_alpha[0]]}
    if cert.r_quadratic_ok is False:
        notes.append("R has nonzero coefficients beyond R_2 yet the recurrence held to this depth")
    if bad_alpha or not cert.green:
        return Classification(Verdict.OUTSIDE_HYPOTHESES, params, cert, depth, ps, rec, notes=notes)

    if ps.polys != family_polys(params, depth).polys:
        notes.append("expanded polynomials differ from the reconstructed family")
        return Classification(Verdict.OUTSIDE_HYPOTHESES, params, cert, depth, ps, rec, notes=notes)
    return Classification(_FAMILY_VERDICT[params.kind], params, cert, depth, ps, rec, notes=notes)


@dataclass(frozen=True)
class Knob:
    """Which coefficient a scan perturbs: ``target`` is "r" or "alpha".

    ``mode`` "set" replaces the coefficient, "scale" multiplies it.
    """

    target: str
    index: int
    mode: str = "set"

    def apply(self, spec: GenFunSpec, value) -> GenFunSpec:
        value = Fraction(value)
        if self.target == "r":
            old = spec.r(self.index)
            return spec.with_r(self.index, old * value if self.mode == "scale" else value)
        if self.target == "alpha":
            old = spec.alpha[self.index]
            return spec.with_alpha(self.index, old * value if self.mode == "scale" else value)
        raise ValueError(f"unknown knob target {self.target!r}")


@dataclass(frozen=True)
class ScanRow:
    knob_value: Fraction
    verdict: str
    first_failure_n: Optional[int]


def scan_perturbations(base: GenFunSpec, knob: Knob, values: Sequence) -> list[ScanRow]:
    rows = []
    for v in values:
        spec = knob.apply(base, v)
        try:
            cls = classify(spec)
            verdict = cls.verdict.value
            fail = cls.recurrence.failure[0] if cls.recurrence and cls.recurrence.failure else None
        except GFCError as exc:
            verdict, fail = f"error:{type(exc).__name__}", None
        rows.append(ScanRow(Fraction(v), verdict, fail))
    return rows
