"""``gfc`` command line: expand | classify | verify | scan | bench.

Exit codes: 0 success (including a not_ttrr answer), 2 parse/usage error,
3 precondition violated, 4 a requested check failed.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .classify import (
    CHECK_NAMES,
    Classification,
    Knob,
    classify,
    recover_lambdas,
    run_certificate,
    scan_perturbations,
)
from .errors import GFCError, InvalidParams, OrderExceeded, OrderTooSmall, SpecParseError, ZeroAlpha
from .families import FamilyParams, check_orthogonality
from .genfun import GenFunSpec, expand
from .recurrence import DerivedSequences, extract_ttrr
from .specfile import ResultDoc, fmt_rational, load_spec, parse_rational, write_atomic

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CHECK = 0, 2, 3, 4
DEFAULT_MAX_ORDER = 256


class CliExit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code
        self.message = message


def max_order() -> int:
    raw = os.environ.get("GFC_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise CliExit(EXIT_PARSE, f"GFC_MAX_ORDER must be an integer, got {raw!r}") from None


def _check_order(n: int) -> None:
    cap = max_order()
    if n > cap:
        raise CliExit(EXIT_PRECONDITION, f"order {n} exceeds GFC_MAX_ORDER={cap}")


def _load(path: str, order: Optional[int] = None) -> GenFunSpec:
    sf = load_spec(path)
    _check_order(order if order is not None else sf.order)
    return sf.to_spec(order)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _normalized(doc: ResultDoc) -> ResultDoc:
    return ResultDoc.from_json(doc.to_json())


def _approx(q: Optional[Fraction], digits: int) -> str:
    if q is None:
        return ""
    with localcontext() as ctx:
        ctx.prec = digits + 5
        return format(Decimal(q.numerator) / Decimal(q.denominator), f".{digits}g")


def _params_dict(params: Optional[FamilyParams]) -> dict:
    if params is None:
        return {}
    out = {"kind": params.kind.value}
    if params.kind.value != "monomial":
        out.update(lambda1=params.lambda1, lambda2=params.lambda2, t1=params.t1, scale_sq=params.scale_sq)
        if params.lam is not None:
            out["lambda"] = params.lam
    return out


def expand_doc(spec: GenFunSpec) -> ResultDoc:
    ps = expand(spec)
    return _normalized(ResultDoc(
        command="expand",
        tables={"polys": [list(p.coeffs) for p in ps]},
        info={"order": spec.order},
    ))


def _tables(spec: GenFunSpec, cls: Classification) -> dict:
    rec = cls.recurrence
    tables = {}
    if rec is not None:
        tables["beta"] = list(rec.betas)
        tables["omega"] = list(rec.omegas)
        if spec.alpha[1] and spec.r(2) and rec.ok:
            ds = DerivedSequences(spec, rec)
            tables["a"] = ds.a_table()
            tables["c"] = ds.c_table()
    return tables


def classify_doc(spec: GenFunSpec) -> ResultDoc:
    cls = classify(spec)
    info = {"depth": cls.depth, "notes": list(cls.notes)}
    if cls.params is not None:
        v = check_orthogonality(cls.params)
        info["orthogonality"] = {"orthogonal": v.orthogonal, "reason": v.reason.value}
    return _normalized(ResultDoc(
        command="classify",
        verdict=cls.verdict.value,
        params=_params_dict(cls.params),
        certificate=cls.certificate.flags(),
        tables=_tables(spec, cls),
        witnesses={"ttrr_valid_to": cls.certificate.ttrr_valid_to, **cls.certificate.witnesses},
        info=info,
    ))


def classify_csv(doc: ResultDoc, decimal: Optional[int] = None) -> str:
    cols = ["beta", "omega", "a", "c"]
    t = doc.tables
    # beta and a start at n = 0, omega and c at n = 1
    offsets = {"beta": 0, "omega": 1, "a": 0, "c": 1}
    length = max([len(t.get(c, [])) + offsets[c] for c in cols] + [0])
    buf = io.StringIO()
    w = csv.writer(buf)
    header = ["n"] + cols
    if decimal is not None:
        header += [f"{c}_approx" for c in cols]
    w.writerow(header)
    for n in range(length):
        vals = []
        for c in cols:
            i = n - offsets[c]
            seq = t.get(c, [])
            vals.append(seq[i] if 0 <= i < len(seq) else None)
        row = [n] + ["" if v is None else fmt_rational(v) for v in vals]
        if decimal is not None:
            row += [_approx(v, decimal) for v in vals]
        w.writerow(row)
    return buf.getvalue()


def _hint(spec: GenFunSpec) -> Optional[FamilyParams]:
    if not any(spec.r_coeffs):
        return FamilyParams.monomial()
    if spec.alpha[1] and spec.r(2) and spec.order >= 3 and spec.alpha[2]:
        try:
            return FamilyParams.from_lambdas(*recover_lambdas(spec.alpha), spec.r(2))
        except InvalidParams:
            return None
    return None


def verify_doc(spec: GenFunSpec, checks: Sequence[str]) -> ResultDoc:
    ps = expand(spec)
    rec = extract_ttrr(ps)
    cert = run_certificate(spec, _hint(spec) if "rescale" in checks else None, ps, rec)
    flags = {c: cert.flag(c) for c in checks}
    witnesses = {c: cert.witnesses[c] for c in checks if c in cert.witnesses and flags[c] is False}
    if rec.failure is not None:
        witnesses["ttrr"] = cert.witnesses["ttrr"]
    passed = all(v is not False for v in flags.values())
    return _normalized(ResultDoc(
        command="verify",
        verdict="pass" if passed else "fail",
        certificate=flags,
        witnesses=witnesses,
        info={"ttrr_valid_to": rec.valid_to},
    ))


def parse_knob(text: str) -> Knob:
    t = text.strip().lower()
    for prefix, target in (("alpha", "alpha"), ("r", "r")):
        if t.startswith(prefix) and t[len(prefix):].isdigit():
            return Knob(target, int(t[len(prefix):]))
    raise CliExit(EXIT_PARSE, f"bad knob {text!r}; expected r<n> or alpha<n>")


def parse_values(text: str) -> tuple[str, list[Fraction]]:
    """"0,1/2,1" sets values; "double" or "*2,*3" scales the current one."""
    t = text.strip()
    if t == "double":
        return "scale", [Fraction(2)]
    items = [s.strip() for s in t.split(",") if s.strip()]
    if not items:
        raise CliExit(EXIT_PARSE, "empty --values")
    try:
        if all(s.startswith("*") for s in items):
            return "scale", [parse_rational(s[1:]) for s in items]
        return "set", [parse_rational(s) for s in items]
    except SpecParseError as exc:
        raise CliExit(EXIT_PARSE, str(exc)) from None


def scan_csv(spec: GenFunSpec, knob: Knob, values: Sequence[Fraction]) -> str:
    if knob.target == "r" and not 1 <= knob.index <= spec.order:
        raise CliExit(EXIT_PRECONDITION, f"R_{knob.index} is outside 1..{spec.order}")
    if knob.target == "alpha" and not 1 <= knob.index <= spec.order:
        raise CliExit(EXIT_PRECONDITION, f"alpha_{knob.index} is outside 1..{spec.order}")
    if knob.target == "r" and knob.index == 1:
        raise CliExit(EXIT_PRECONDITION, "R_1 is fixed to 0")
    rows = scan_perturbations(spec, knob, values)
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["knob_value", "verdict", "first_failure_n"])
    for row in rows:
        label = fmt_rational(row.knob_value)
        if knob.mode == "scale":
            label = "*" + label
        w.writerow([label, row.verdict, "-" if row.first_failure_n is None else row.first_failure_n])
    return buf.getvalue()


def _bench_spec(order: int) -> GenFunSpec:
    return GenFunSpec.build([Fraction(1, factorial(n)) for n in range(order + 1)], {2: 1}, order)


def polys_digest(spec: GenFunSpec) -> str:
    ps = expand(spec)
    blob = json.dumps([[fmt_rational(c) for c in p.coeffs] for p in ps])
    return hashlib.sha256(blob.encode()).hexdigest()


def bench_csv(order: int, reps: int) -> str:
    if order < 4:
        raise CliExit(EXIT_PRECONDITION, "bench needs --order >= 4")
    if reps < 1:
        raise CliExit(EXIT_PRECONDITION, "bench needs --reps >= 1")
    _check_order(order)
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["order", "reps", "min_seconds", "mean_seconds", "sha256"])
    for n in sorted({order // 4, order // 2, order}):
        spec = _bench_spec(n)
        times, digests = [], set()
        for _ in range(reps):
            t0 = time.perf_counter()
            digests.add(polys_digest(spec))
            times.append(time.perf_counter() - t0)
        if len(digests) != 1:
            raise CliExit(EXIT_CHECK, f"non-deterministic expansion at order {n}")
        w.writerow([n, reps, f"{min(times):.6f}", f"{sum(times) / reps:.6f}", digests.pop()])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gfc", description="Polynomial sets generated by F(xt - R(t)).")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", help="write P_0..P_N coefficient lists")
    e.add_argument("spec")
    e.add_argument("--order", type=int)
    e.add_argument("--out")

    c = sub.add_parser("classify", help="classify the generated set")
    c.add_argument("spec")
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    c.add_argument("--decimal", type=int, metavar="K", help="append approximate columns with K digits")
    c.add_argument("--out")

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("spec")
    v.add_argument("--checks", default="gf7,gf9,gf10,gf11,gf12,solricati,symmetry")
    v.add_argument("--out")

    s = sub.add_parser("scan", help="perturb one coefficient and tabulate verdicts")
    s.add_argument("spec")
    s.add_argument("--knob", required=True)
    s.add_argument("--values", required=True)
    s.add_argument("--csv", dest="out")

    b = sub.add_parser("bench", help="time expansion at orders N/4, N/2, N")
    b.add_argument("--order", type=int, default=64)
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--csv", dest="out")
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "expand":
            doc = expand_doc(_load(args.spec, args.order))
            _emit(doc.to_json(), args.out)
        elif args.command == "classify":
            doc = classify_doc(_load(args.spec))
            if args.fmt == "csv":
                _emit(classify_csv(doc, args.decimal), args.out)
            else:
                _emit(doc.to_json(), args.out)
        elif args.command == "verify":
            checks = [c.strip() for c in args.checks.split(",") if c.strip()]
            unknown = [c for c in checks if c not in CHECK_NAMES]
            if unknown or not checks:
                raise CliExit(EXIT_PARSE, f"unknown checks {unknown}; choose from {', '.join(CHECK_NAMES)}")
            doc = verify_doc(_load(args.spec), checks)
            _emit(doc.to_json(), args.out)
            if doc.verdict != "pass":
                failed = [c for c, ok in doc.certificate.items() if ok is False]
                msg = f"failed checks: {', '.join(failed)}"
                if "ttrr" in doc.witnesses:
                    msg += f" (three-term recurrence fails at n={doc.witnesses['ttrr']['n']})"
                raise CliExit(EXIT_CHECK, msg)
        elif args.command == "scan":
            knob = parse_knob(args.knob)
            mode, values = parse_values(args.values)
            knob = Knob(knob.target, knob.index, mode)
            _emit(scan_csv(_load(args.spec), knob, values), args.out)
        elif args.command == "bench":
            _emit(bench_csv(args.order, args.reps), args.out)
    except CliExit as exc:
        if exc.message:
            print(f"gfc: {exc.message}", file=sys.stderr)
        return exc.code
    except SpecParseError as exc:
        print(f"gfc: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ZeroAlpha as exc:
        print(f"gfc: precondition failed at n={exc.n}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (OrderTooSmall, OrderExceeded, GFCError) as exc:
        print(f"gfc: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
