import csv
import io
import json
import math
import subprocess
import sys

import pytest

from vallee_poussin import cli, verify
from vallee_poussin.errors import ConfigError


def _write(tmp_path, doc, name="cfg.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


APPROX = {
    "command": "approximate",
    "functions": [{"family": "holder_alpha", "alpha": 1.0}, {"family": "constant", "value": 3}],
    "n_values": [16],
    "x_points": 16,
    "seed": 3,
}


class TestConfig:
    def test_defaults(self):
        cfg = cli.parse_config({"command": "verify"})
        assert cfg.p_policy == "half_n" and cfg.output["format"] == "csv"

    @pytest.mark.parametrize("doc,field", [
        ({"command": "frobnicate"}, "command"),
        ({"command": "bounds", "n_values": [8, 5]}, "n_values[1]"),
        ({"command": "bounds", "n_values": []}, "n_values"),
        ({"command": "bounds", "functions": [{"family": "holder_alpha", "alpha": 2}]}, "functions[0]"),
        ({"command": "bounds", "functions": ["x"]}, "functions[0]"),
        ({"command": "bounds", "quadrature": {"abs_tol": -1}}, "quadrature"),
        ({"command": "bounds", "quadrature": {"bogus": 1}}, "quadrature"),
        ({"command": "bounds", "output": {"format": "xml"}}, "output.format"),
        ({"command": "bounds", "p_policy": "third"}, "p_policy"),
        ({"command": "bounds", "p_policy": {"explicit": [0]}}, "p_policy.explicit[0]"),
        ({"command": "holder", "alphas": [0.5, 1.5]}, "alphas[1]"),
        ({"command": "bounds", "seed": "one"}, "seed"),
        ({"command": "bounds", "colour": "red"}, "colour"),
    ])
    def test_field_paths(self, doc, field):
        with pytest.raises(ConfigError) as exc:
            cli.parse_config(doc)
        assert exc.value.field == field
        assert str(exc.value).startswith(field + ":")

    def test_odd_n_allowed_with_explicit_p(self):
        cfg = cli.parse_config({"command": "approximate", "n_values": [9], "p_policy": {"explicit": [1, 3]}})
        assert cfg.p_values(9) == [1, 3]

    def test_command_mismatch(self):
        with pytest.raises(ConfigError):
            cli.parse_config({"command": "bounds"}, "holder")


class TestApproximate:
    def test_constant_rows_vanish(self, tmp_path):
        out = tmp_path / "out.csv"
        assert cli.main(["approximate", "--config", _write(tmp_path, APPROX), "--out", str(out)]) == 0
        rows = _rows(out.read_text())
        const = [r for r in rows if r["function"].startswith("constant")]
        assert len(const) == 16 and all(float(r["rho"]) == 0 for r in const)

    def test_holder_summary_below_bound(self, tmp_path):
        out = tmp_path / "out.csv"
        cli.main(["approximate", "--config", _write(tmp_path, APPROX), "--out", str(out)])
        rows = [r for r in _rows(out.read_text()) if r["function"].startswith("holder")]
        assert float(rows[0]["sup_abs"]) < 1.443 * math.pi / 16
        for r in rows:
            assert float(r["rho"]) == pytest.approx(float(r["f"]) - float(r["V"]), abs=1e-15)

    def test_byte_identical(self, tmp_path):
        cfg = _write(tmp_path, APPROX)
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        cli.main(["approximate", "--config", cfg, "--out", str(a)])
        cli.main(["approximate", "--config", cfg, "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()
        assert b"\r" not in a.read_bytes()

    def test_seventeen_digits(self, tmp_path):
        out = tmp_path / "out.csv"
        cli.main(["approximate", "--config", _write(tmp_path, APPROX), "--out", str(out)])
        x = _rows(out.read_text())[1]["x"]
        assert x == f"{float(x):.17g}" and float(x) == 2 * math.pi / 16

    def test_json_output(self, tmp_path):
        doc = dict(APPROX, output={"format": "json"})
        out = tmp_path / "out.json"
        cli.main(["approximate", "--config", _write(tmp_path, doc), "--out", str(out)])
        data = json.loads(out.read_text())
        assert data["status"] == "pass" and len(data["rows"]) == 32

    def test_svg(self, tmp_path):
        svg = tmp_path / "plot.svg"
        cli.main(["approximate", "--config", _write(tmp_path, APPROX), "--out",
                  str(tmp_path / "o.csv"), "--plot", str(svg)])
        text = svg.read_text()
        assert text.startswith("<svg") and text.count("<polyline") == 4


@pytest.fixture(scope="module")
def rows(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("bounds")
    doc = {"command": "bounds", "n_values": [8, 16], "functions": [
        {"family": "holder_alpha", "alpha": 0.5},
        {"family": "lipschitz_sawtooth_smoothed"},
        {"family": "constant", "value": 2},
    ]}
    out = tmp / "b.csv"
    code = cli.main(["bounds", "--config", _write(tmp, doc), "--out", str(out)])
    return code, _rows(out.read_text())


class TestBounds:
    def test_exit_code(self, rows):
        assert rows[0] == 0

    def test_orderings(self, rows):
        for r in rows[1]:
            assert float(r["theorem1"]) <= float(r["general_c"])
            assert r["violations"] == ""
            if not r["function"].startswith("constant"):
                assert float(r["sup_abs"]) < float(r["theorem1"])

    def test_constant_row(self, rows):
        for r in rows[1]:
            if r["function"].startswith("constant"):
                assert float(r["sup_abs"]) == 0
                assert all(float(r[k]) >= 0 for k in ("theorem1", "general_c", "classical"))

    def test_convex_column_only_when_concave(self, rows):
        holder = [r for r in rows[1] if r["function"].startswith("holder")]
        assert all(r["convex_c"] != "" for r in holder)


class TestHolder:
    def test_rows(self, tmp_path):
        doc = {"command": "holder", "n_values": [16], "alphas": [0.5, 1.0]}
        out = tmp_path / "h.csv"
        assert cli.main(["holder", "--config", _write(tmp_path, doc), "--out", str(out)]) == 0
        rows = {float(r["alpha"]): r for r in _rows(out.read_text())}
        assert float(rows[1.0]["lower"]) == pytest.approx(math.pi / 32, abs=1e-15)
        assert float(rows[1.0]["upper"]) == pytest.approx(0.2833, abs=1e-4)
        assert float(rows[0.5]["upper"]) == pytest.approx(0.6887, abs=1e-4)
        for r in rows.values():
            assert float(r["empirical"]) <= float(r["upper"]) and r["ok"] == "true"


class TestOtherCommands:
    def test_constants(self, capsys):
        assert cli.main(["constants"]) == 0
        rows = {r["name"]: float(r["value"]) for r in _rows(capsys.readouterr().out)}
        assert rows["theorem1_weight_sum"] < 1.6812 < rows["general_c_factor"]
        assert 2.657 < rows["tau_1"] < 2.66

    def test_verify_exit_zero(self, capsys):
        assert cli.main(["verify"]) == 0
        assert "fail" not in {r["status"] for r in _rows(capsys.readouterr().out)}

    @pytest.mark.parametrize("status,code", [("fail", 1), ("inconclusive", 2), ("pass", 0)])
    def test_status_codes(self, monkeypatch, capsys, status, code):
        monkeypatch.setattr(verify, "cmd_verify", lambda q: {"status": status, "checks": []})
        assert cli.main(["verify"]) == code

    def test_usage_errors(self, tmp_path, capsys):
        assert cli.main(["nope"]) == 3
        assert cli.main(["bounds"]) == 3
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert cli.main(["bounds", "--config", str(bad)]) == 3
        assert cli.main(["bounds", "--config", str(tmp_path / "missing.json")]) == 3
        assert "error" in capsys.readouterr().err

    def test_console_script(self, tmp_path):
        proc = subprocess.run([sys.executable, "-m", "vallee_poussin.cli", "constants"],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and proc.stdout.startswith("name,value,formula\n")
