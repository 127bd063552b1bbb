"""Tests for the command-line interface: grammars, formats, exit codes."""

import importlib.resources
import json

import numpy as np
import pytest

from isoparam import random_subspace
from isoparam.cli import EXIT_NOINPUT, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, run

jsonschema = pytest.importorskip("jsonschema")


def run_cli(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def load_schema(name):
    text = (
        importlib.resources.files("isoparam").joinpath(f"schemas/{name}.json").read_text()
    )
    return json.loads(text)


def validate(name, payload):
    jsonschema.validate(payload, load_schema(name))


@pytest.fixture
def line_in_c2(tmp_path):
    path = tmp_path / "w.json"
    path.write_text(random_subspace(2, 1, seed=3).to_json())
    return str(path)


class TestSpectrum:
    def test_horosphere_table(self, capsys):
        code, out = run_cli(capsys, "spectrum", "--example", "horosphere", "--n", "3")
        assert code == EXIT_OK
        # {1.0 x4, 2.0 x1} with c = -4
        lines = [ln.split() for ln in out.splitlines() if ln and ln[0].isspace() or ln[:1].isdigit() or True]
        assert "1" in out and "4" in out and "2" in out
        rows = [ln.split() for ln in out.splitlines()[2:]]
        assert rows[0][:3] == ["1", "4", "4"]
        assert rows[1][:3] == ["2", "1", "1"]

    def test_json_schema_and_values(self, capsys):
        code, out = run_cli(
            capsys,
            "spectrum", "--example", "tube-chk", "--n", "3", "--k", "1",
            "--radius", "1", "--output", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        validate("spectrum", payload)
        entries = payload["spectra"][0]["entries"]
        values = [v for v, _, _ in entries]
        assert abs(values[0] - np.tanh(1)) < 1e-12

    def test_subspace_spectra_per_angle(self, capsys, line_in_c2):
        code, out = run_cli(
            capsys,
            "spectrum", "--subspace", line_in_c2, "--n", "3",
            "--radius", "1.0", "--output", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        validate("spectrum", payload)
        # w_perp of a real line in C^2 has angles {0, pi/2}
        angles = sorted(s["normal_angle"] for s in payload["spectra"])
        assert abs(angles[0]) < 1e-9
        assert abs(angles[-1] - np.pi / 2) < 1e-9

    def test_subspace_spectrum_explicit_angle(self, capsys, line_in_c2):
        code, out = run_cli(
            capsys,
            "spectrum", "--subspace", line_in_c2, "--n", "3",
            "--radius", "1.0", "--angle", "0.7", "--output", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        validate("spectrum", payload)
        assert len(payload["spectra"]) == 1
        assert payload["spectra"][0]["normal_angle"] == 0.7

    def test_csv_digits(self, capsys):
        code, out = run_cli(
            capsys,
            "spectrum", "--example", "horosphere", "--n", "2", "--output", "csv",
        )
        assert code == EXIT_OK
        header, *rows = out.strip().splitlines()
        assert header.startswith("example,n,k,r,")
        # 17 significant digits round-trip doubles exactly; '.' separator
        values = [float(row.split(",")[5]) for row in rows]
        assert values == [1.0, 2.0]

    def test_csv_roundtrip_irrational(self, capsys):
        code, out = run_cli(
            capsys,
            "spectrum", "--example", "tube-chk", "--n", "3", "--k", "1",
            "--radius", "1", "--output", "csv",
        )
        assert code == EXIT_OK
        rows = out.strip().splitlines()[1:]
        values = sorted(float(row.split(",")[5]) for row in rows)
        assert values[0] == np.tanh(1.0)  # bit-exact round trip
        assert "." in rows[0].split(",")[5]


class TestClassify:
    def test_case_vi_json(self, capsys, line_in_c2):
        code, out = run_cli(
            capsys,
            "classify", "--subspace", line_in_c2, "--n", "3",
            "--radius", "1.0", "--output", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        validate("classify", payload)
        assert payload["case"] == "vi"
        assert payload["homogeneous"] is False
        assert payload["constant_principal_curvatures"] is False
        assert payload["invariant"] == [[0.0, 2], [np.pi / 2, 1]]

    def test_named_families(self, capsys):
        for fam, case in [("horosphere", "iii"), ("tube-rhn", "ii"), ("lohnherr", "iv")]:
            code, out = run_cli(
                capsys, "classify", "--example", fam, "--n", "3", "--output", "json"
            )
            assert code == EXIT_OK
            payload = json.loads(out)
            validate("classify", payload)
            assert payload["case"] == case
            assert payload["homogeneous"] is True


class TestLift:
    def test_rhn_lift_json(self, capsys):
        code, out = run_cli(
            capsys,
            "lift", "--example", "tube-rhn", "--n", "3", "--radius", "1.0",
            "--output", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        validate("lift", payload)
        assert payload["jordan_type"] == "IV"
        assert payload["admissible"] is True

    def test_lohnherr_lift_is_type_iii(self, capsys):
        code, out = run_cli(
            capsys, "lift", "--example", "lohnherr", "--n", "3", "--output", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        validate("lift", payload)
        assert payload["jordan_type"] == "III"
        assert payload["admissible"] is True


class TestModuli:
    def test_ch3_unique(self, capsys):
        code, out = run_cli(capsys, "moduli", "--n", "3", "--k", "3", "--output", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        validate("moduli", payload)
        assert len(payload["families"]) == 1
        assert payload["families"][0]["entries"] == [[0.0, 2], [np.pi / 2, 1]]
        assert payload["families"][0]["free_angles"] == 0


class TestVerify:
    def test_single_suite(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--suite", "cartan", "--seed", "42", "--output", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        validate("verify", payload)
        assert payload["ok"] is True

    def test_empty_suite_set(self, capsys):
        code, out = run_cli(capsys, "verify", "--suite", "", "--output", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["suites"] == []
        assert payload["ok"] is True

    def test_unknown_suite(self, capsys):
        code, out = run_cli(capsys, "verify", "--suite", "bogus")
        assert code == EXIT_VALIDATION


class TestHorocycle:
    def test_points_are_members(self, capsys):
        code, out = run_cli(
            capsys, "horocycle", "--n", "3", "--seed", "5", "--output", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        validate("horocycle", payload)
        assert len(payload["points"]) == 8
        assert all(pt["in_w_tube_core"] for pt in payload["points"])

    def test_tol_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("ISOPARAM_TOL", "1e-30")
        code, out = run_cli(
            capsys, "horocycle", "--n", "3", "--seed", "5", "--output", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        # an impossible tolerance flips the membership verdicts
        assert not all(pt["in_w_tube_core"] for pt in payload["points"])


class TestDeterminismAndErrors:
    def test_byte_identical_json(self, capsys):
        argv = ["verify", "--suite", "cartan", "--seed", "7", "--output", "json"]
        _, out1 = run_cli(capsys, *argv)
        _, out2 = run_cli(capsys, *argv)
        assert out1 == out2

    def test_suite_results_independent_of_selection(self):
        # per-check derived sub-seeds: the cartan results are the same
        # whether the suite runs alone or alongside others
        from isoparam import RunConfig, verify_suites

        alone = verify_suites(RunConfig(seed=11), suites=("cartan",))
        combined = verify_suites(RunConfig(seed=11), suites=("tube", "cartan"))
        cartan_alone = alone["suites"][0]
        cartan_combined = [s for s in combined["suites"] if s["suite"] == "cartan"][0]
        assert cartan_alone == cartan_combined

    def test_usage_error(self, capsys):
        code, out = run_cli(capsys, "classify")
        assert code == EXIT_USAGE
        validate("error", json.loads(out))

    def test_unknown_command(self, capsys):
        code, out = run_cli(capsys)
        assert code == EXIT_USAGE

    def test_file_not_found(self, capsys):
        code, out = run_cli(
            capsys, "spectrum", "--subspace", "/no/such/file.json", "--n", "3",
            "--radius", "1",
        )
        assert code == EXIT_NOINPUT
        validate("error", json.loads(out))

    def test_validation_failure(self, capsys):
        code, out = run_cli(
            capsys, "spectrum", "--example", "tube-chk", "--n", "3", "--k", "9",
            "--radius", "1",
        )
        assert code == EXIT_VALIDATION
        payload = json.loads(out)
        validate("error", payload)
        assert payload["error"]["type"] == "InvalidK"
