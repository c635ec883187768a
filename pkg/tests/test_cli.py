import csv
import io
import json
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings

from gfc.cli import bench_csv, run
from gfc.errors import SpecParseError
from gfc.specfile import AlphaFamily, ResultDoc, SpecFile, load_spec, parse_rational
from gfc.series import Poly

from helpers import classical_hermite_ttrr, random_specs

FIX = Path(__file__).parent / "fixtures"
ALL_FIXTURES = sorted(FIX.glob("*.json"))


def gfc(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestExpand:
    def test_hermite(self, capsys, tmp_path):
        out = tmp_path / "h.json"
        code, _, _ = gfc(capsys, "expand", FIX / "hermite.json", "--order", 3, "--out", out)
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["tables"]["polys"][3] == ["0", "-3", "0", "1"]
        oracle = classical_hermite_ttrr(3)
        assert [[parse_rational(c) for c in p] for p in doc["tables"]["polys"]] == oracle

    def test_monomial(self, capsys):
        code, out, _ = gfc(capsys, "expand", FIX / "monomial.json")
        polys = json.loads(out)["tables"]["polys"]
        assert code == 0
        assert polys == [["0"] * n + ["1"] for n in range(11)]

    def test_zero_alpha_exit_3(self, capsys):
        code, _, err = gfc(capsys, "expand", FIX / "alpha2zero.json")
        assert code == 3 and "n=2" in err

    def test_parse_error_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert gfc(capsys, "expand", bad)[0] == 2

    def test_missing_convention_exit_2(self, capsys, tmp_path):
        d = json.loads((FIX / "hermite.json").read_text())
        del d["r"]["convention"]
        p = tmp_path / "noconv.json"
        p.write_text(json.dumps(d))
        code, _, err = gfc(capsys, "expand", p)
        assert code == 2 and "convention" in err

    def test_float_rejected(self, capsys, tmp_path):
        d = json.loads((FIX / "hermite.json").read_text())
        d["alpha"]["values"][2] = 0.5
        p = tmp_path / "float.json"
        p.write_text(json.dumps(d))
        assert gfc(capsys, "expand", p)[0] == 2

    def test_max_order_env(self, capsys, monkeypatch):
        monkeypatch.setenv("GFC_MAX_ORDER", "5")
        assert gfc(capsys, "expand", FIX / "hermite.json")[0] == 3


class TestClassify:
    def test_legendre(self, capsys):
        code, out, _ = gfc(capsys, "classify", FIX / "legendre.json", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["verdict"] == "ultraspherical" and doc["params"]["lambda"] == "1/2"

    def test_chebyshev_csv(self, capsys):
        code, out, _ = gfc(capsys, "classify", FIX / "chebyshev.json", "--csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert [r["omega"] for r in rows[1:5]] == ["1/2", "1/4", "1/4", "1/4"]

    def test_chebyshev_json_omega(self, capsys):
        _, out, _ = gfc(capsys, "classify", FIX / "chebyshev.json")
        doc = json.loads(out)
        assert doc["verdict"] == "chebyshev1"
        assert doc["tables"]["omega"][:3] == ["1/2", "1/4", "1/4"]

    def test_decimal_columns(self, capsys):
        _, out, _ = gfc(capsys, "classify", FIX / "legendre.json", "--csv", "--decimal", 6)
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[1]["omega"] == "1/3" and rows[1]["omega_approx"] == "0.333333"

    def test_cubic_r_not_ttrr(self, capsys):
        code, out, _ = gfc(capsys, "classify", FIX / "cubicR.json")
        doc = json.loads(out)
        assert code == 0 and doc["verdict"] == "not_ttrr"
        assert isinstance(doc["witnesses"]["ttrr"]["n"], int)

    def test_scaled_ultraspherical(self, capsys):
        _, out, _ = gfc(capsys, "classify", FIX / "ultra_scaled.json")
        doc = json.loads(out)
        assert doc["verdict"] == "ultraspherical"
        assert doc["params"]["lambda"] == "3/2" and doc["params"]["scale_sq"] == "1/4"


class TestVerify:
    def test_hermite_all(self, capsys):
        assert gfc(capsys, "verify", FIX / "hermite.json")[0] == 0

    def test_hermite_with_rescale(self, capsys):
        code, out, _ = gfc(capsys, "verify", FIX / "hermite.json", "--checks", "rescale,r_quadratic")
        assert code == 0 and json.loads(out)["certificate"] == {"rescale": True, "r_quadratic": True}

    def test_random_gf7_passes(self, capsys):
        assert gfc(capsys, "verify", FIX / "randomR.json", "--checks", "gf7")[0] == 0

    def test_random_gf9_fails(self, capsys):
        code, out, err = gfc(capsys, "verify", FIX / "randomR.json", "--checks", "gf9")
        assert code == 4
        assert "three-term recurrence fails" in err
        assert "ttrr" in json.loads(out)["witnesses"]

    def test_unknown_check(self, capsys):
        assert gfc(capsys, "verify", FIX / "hermite.json", "--checks", "gf99")[0] == 2


class TestScan:
    def test_hermite_r3(self, capsys, tmp_path):
        out = tmp_path / "scan.csv"
        assert gfc(capsys, "scan", FIX / "hermite.json", "--knob", "r3", "--values", "0,1", "--csv", out)[0] == 0
        rows = list(csv.reader(io.StringIO(out.read_text())))
        assert rows[0] == ["knob_value", "verdict", "first_failure_n"]
        assert rows[1] == ["0", "hermite", "-"]
        assert rows[2][:2] == ["1", "not_ttrr"] and int(rows[2][2]) <= 4

    def test_hermite_r4_zero(self, capsys):
        code, out, _ = gfc(capsys, "scan", FIX / "hermite.json", "--knob", "r4", "--values", "0")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and rows[1:] == [["0", "hermite", "-"]]

    def test_legendre_alpha5_double(self, capsys):
        code, out, _ = gfc(capsys, "scan", FIX / "legendre.json", "--knob", "alpha5", "--values", "double")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and rows[1][1] in ("not_ttrr", "outside_hypotheses")

    def test_bad_knob(self, capsys):
        assert gfc(capsys, "scan", FIX / "hermite.json", "--knob", "q3", "--values", "0")[0] == 2


class TestBench:
    def test_columns_and_determinism(self):
        rows = list(csv.DictReader(io.StringIO(bench_csv(32, 3))))
        assert [int(r["order"]) for r in rows] == [8, 16, 32]
        assert all(len(r["sha256"]) == 64 for r in rows)

    def test_monotone_time_at_64(self):
        rows = list(csv.DictReader(io.StringIO(bench_csv(64, 2))))
        times = [float(r["min_seconds"]) for r in rows]
        assert times == sorted(times)


class TestRoundTrip:
    @pytest.mark.parametrize("path", ALL_FIXTURES, ids=lambda p: p.name)
    def test_specfile(self, path):
        sf = load_spec(path)
        again = SpecFile.from_dict(json.loads(json.dumps(sf.to_dict())))
        assert again == sf
        assert again.to_dict() == sf.to_dict()

    @pytest.mark.parametrize("path", [p for p in ALL_FIXTURES if p.name != "alpha2zero.json"], ids=lambda p: p.name)
    @pytest.mark.parametrize("cmd", ["expand", "classify", "verify"])
    def test_resultdoc(self, capsys, path, cmd):
        code, out, _ = gfc(capsys, cmd, path)
        assert code in (0, 4)
        doc = ResultDoc.from_json(out)
        assert ResultDoc.from_json(doc.to_json()) == doc
        assert doc.to_json() == out

    @settings(max_examples=30, deadline=None)
    @given(random_specs(max_order=9))
    def test_specfile_from_random_spec(self, spec):
        sf = SpecFile.from_spec(spec)
        assert SpecFile.from_dict(json.loads(json.dumps(sf.to_dict()))).to_spec() == spec

    def test_poly_witness_round_trip(self):
        doc = ResultDoc("x", witnesses={"ttrr": {"n": 3, "residual": Poly((Fraction(1, 3), 0, -2))}})
        assert ResultDoc.from_json(doc.to_json()) == doc

    def test_no_floats_in_output(self, capsys):
        _, out, _ = gfc(capsys, "classify", FIX / "legendre.json")

        def walk(v):
            assert not isinstance(v, float)
            if isinstance(v, dict):
                for x in v.values():
                    walk(x)
            elif isinstance(v, list):
                for x in v:
                    walk(x)

        walk(json.loads(out))


def test_family_kinds_agree():
    exp = SpecFile(8, AlphaFamily("exp", (("rate", Fraction(1)),)), (0, 1) + (0,) * 6).to_spec()
    herm = SpecFile(8, AlphaFamily("hermite", (("alpha1", Fraction(1)), ("lambda1", Fraction(1)))),
                    (0, 1) + (0,) * 6).to_spec()
    assert exp == herm


def test_parse_rational_rejects_decimal():
    with pytest.raises(SpecParseError):
        parse_rational("0.5")


def test_console_script(tmp_path):
    out = tmp_path / "c.json"
    proc = subprocess.run(["gfc", "classify", str(FIX / "hermite.json"), "--out", str(out)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(out.read_text())["verdict"] == "hermite"
