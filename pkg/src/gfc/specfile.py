"""JSON spec files and result documents.

Rationals travel as "p/q" (or integer) strings, never as floats.  A spec file
looks like::

    {
      "order": 10,
      "alpha": {"kind": "list", "values": ["1", "1", "1/2", ...]},
      "r": {"kind": "list", "values": ["0", "1", "0", ...],
            "convention": "paper_Rn_over_n"}
    }

``r.values`` are R_1..R_N with R(t) = sum R_n t**n / n.  ``alpha`` may instead
be ``{"kind": "family", "family": <name>, "params": {...}}`` with family one of
hermite, chebyshev1, ultraspherical, exp, binomial, log.
"""
from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .errors import SpecParseError
from .families import alphan_sequence
from .genfun import GenFunSpec
from .series import Poly

R_CONVENTION = "paper_Rn_over_n"

# family -> (required params, optional params with defaults)
FAMILY_PARAMS = {
    "hermite": (("lambda1",), {"alpha1": "1"}),
    "chebyshev1": (("lambda2",), {"alpha1": "1"}),
    "ultraspherical": (("lambda1", "lambda2"), {"alpha1": "1"}),
    "exp": ((), {"rate": "1"}),
    "binomial": (("exponent",), {"rate": "1"}),
    "log": ((), {"rate": "1"}),
}


def parse_rational(s: Any) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise SpecParseError(f"rational must be an integer or a 'p/q' string, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise SpecParseError(f"rational must be a string, got {type(s).__name__}")
    txt = s.strip()
    if "." in txt or "e" in txt.lower():
        raise SpecParseError(f"decimal notation is not accepted: {s!r}")
    try:
        return Fraction(txt)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(f"bad rational {s!r}: {exc}") from None


def fmt_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def family_alpha_values(family: str, params: dict[str, Fraction], order: int) -> list[Fraction]:
    """alpha_0..alpha_order for a built-in family kind.

    exp: F = e^{c t}; binomial: F = (1 - c t)^{-e}; log: F = 1 + (1/c) ln(1/(1 - c t)).
    All three are instances of the lambda recursion.
    """
    p = params
    if family == "hermite":
        return alphan_sequence(p["lambda1"], 0, order, p["alpha1"])
    if family == "chebyshev1":
        return alphan_sequence(0, p["lambda2"], order, p["alpha1"])
    if family == "ultraspherical":
        return alphan_sequence(p["lambda1"], p["lambda2"], order, p["alpha1"])
    c = p["rate"]
    if family == "exp":
        return alphan_sequence(c, 0, order, c)
    if family == "binomial":
        e = p["exponent"]
        return alphan_sequence(e * c, c, order, e * c)
    if family == "log":
        return alphan_sequence(0, c, order, 1)
    raise SpecParseError(f"unknown alpha family {family!r}")


@dataclass(frozen=True)
class AlphaFamily:
    family: str
    params: tuple[tuple[str, Fraction], ...]


@dataclass(frozen=True)
class SpecFile:
    order: int
    alpha: Union[tuple[Fraction, ...], AlphaFamily]
    r_values: tuple[Fraction, ...]

    def to_spec(self, order: Optional[int] = None) -> GenFunSpec:
        """Materialise a GenFunSpec, optionally cut down to a smaller order."""
        n = self.order if order is None else order
        if n > self.order and not isinstance(self.alpha, AlphaFamily):
            raise SpecParseError(f"file only provides data to order {self.order}")
        if isinstance(self.alpha, AlphaFamily):
            alpha = family_alpha_values(self.alpha.family, dict(self.alpha.params), n)
        else:
            alpha = list(self.alpha[: n + 1])
        rs = list(self.r_values[:n]) + [Fraction(0)] * max(0, n - len(self.r_values))
        try:
            return GenFunSpec(tuple(alpha), tuple(rs), n)
        except ValueError as exc:
            raise SpecParseError(str(exc)) from None

    def to_dict(self) -> dict:
        if isinstance(self.alpha, AlphaFamily):
            alpha = {"kind": "family", "family": self.alpha.family,
                     "params": {k: fmt_rational(v) for k, v in self.alpha.params}}
        else:
            alpha = {"kind": "list", "values": [fmt_rational(a) for a in self.alpha]}
        return {
            "order": self.order,
            "alpha": alpha,
            "r": {"kind": "list", "values": [fmt_rational(v) for v in self.r_values],
                  "convention": R_CONVENTION},
        }

    @classmethod
    def from_dict(cls, d: Any) -> SpecFile:
        if not isinstance(d, dict):
            raise SpecParseError("spec must be a JSON object")
        for key in ("order", "alpha", "r"):
            if key not in d:
                raise SpecParseError(f"missing key {key!r}")
        order = d["order"]
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise SpecParseError(f"order must be a positive integer, got {order!r}")

        a = d["alpha"]
        if not isinstance(a, dict) or "kind" not in a:
            raise SpecParseError("alpha must be an object with a 'kind'")
        if a["kind"] == "list":
            alpha = tuple(parse_rational(v) for v in a.get("values", []))
            if len(alpha) != order + 1:
                raise SpecParseError(f"alpha list needs {order + 1} values, got {len(alpha)}")
        elif a["kind"] == "family":
            fam = a.get("family")
            if fam not in FAMILY_PARAMS:
                raise SpecParseError(f"unknown alpha family {fam!r}")
            required, optional = FAMILY_PARAMS[fam]
            raw = a.get("params", {}) or {}
            unknown = set(raw) - set(required) - set(optional)
            if unknown:
                raise SpecParseError(f"unknown params for {fam}: {sorted(unknown)}")
            params = {}
            for k in required:
                if k not in raw:
                    raise SpecParseError(f"family {fam} needs param {k!r}")
                params[k] = parse_rational(raw[k])
            for k, default in optional.items():
                params[k] = parse_rational(raw.get(k, default))
            alpha = AlphaFamily(fam, tuple(sorted(params.items())))
        else:
            raise SpecParseError(f"unknown alpha kind {a['kind']!r}")

        r = d["r"]
        if not isinstance(r, dict) or r.get("kind") != "list":
            raise SpecParseError("r must be {'kind': 'list', ...}")
        if r.get("convention") != R_CONVENTION:
            raise SpecParseError(f"r.convention must be {R_CONVENTION!r}, got {r.get('convention')!r}")
        r_values = tuple(parse_rational(v) for v in r.get("values", []))
        if len(r_values) != order:
            raise SpecParseError(f"r list needs {order} values (R_1..R_{order}), got {len(r_values)}")
        return cls(order, alpha, r_values)

    @classmethod
    def from_spec(cls, spec: GenFunSpec) -> SpecFile:
        return cls(spec.order, spec.alpha, spec.r_coeffs)


def load_spec(path: Union[str, Path]) -> SpecFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecParseError(f"cannot read {path}: {exc}") from None
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"{path}: invalid JSON: {exc}") from None
    return SpecFile.from_dict(d)


def write_atomic(path: Union[str, Path], text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _enc(v: Any) -> Any:
    """JSON-ready form: Fractions become strings, Polys coefficient lists."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, Fraction):
        return fmt_rational(v)
    if isinstance(v, int):
        return v
    if isinstance(v, Poly):
        return {"poly": [fmt_rational(c) for c in v.coeffs]}
    if isinstance(v, dict):
        return {str(k): _enc(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_enc(x) for x in v]
    return v


def _dec(v: Any) -> Any:
    if isinstance(v, str):
        try:
            return parse_rational(v)
        except SpecParseError:
            return v
    if isinstance(v, dict):
        if set(v) == {"poly"}:
            return Poly(tuple(parse_rational(c) for c in v["poly"]))
        return {k: _dec(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_dec(x) for x in v]
    return v


@dataclass
class ResultDoc:
    """Machine-readable command output.

    ``tables`` holds per-index sequences (beta, omega, a, c, polys);
    ``witnesses`` carries failure evidence keyed by check name.
    """

    command: str
    verdict: Optional[str] = None
    params: dict[str, Fraction] = field(default_factory=dict)
    certificate: dict[str, Optional[bool]] = field(default_factory=dict)
    tables: dict[str, list] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    info: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "verdict": self.verdict,
            "params": _enc(self.params),
            "certificate": dict(self.certificate),
            "tables": _enc(self.tables),
            "witnesses": _enc(self.witnesses),
            "info": _enc(self.info),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> ResultDoc:
        return cls(
            command=d["command"],
            verdict=d.get("verdict"),
            params=_dec(d.get("params", {})),
            certificate=dict(d.get("certificate", {})),
            tables=_dec(d.get("tables", {})),
            witnesses=_dec(d.get("witnesses", {})),
            info=_dec(d.get("info", {})),
        )

    @classmethod
    def from_json(cls, text: str) -> ResultDoc:
        return cls.from_dict(json.loads(text))
