import json

import pytest

from doublecyclic.cli import main

W_ARGS = ["-r", "3", "-s", "3", "-b", "x+1", "-l", "1", "-a", "x^2+x+1"]


def run(capsys, argv):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestInfo:
    def test_worked_instance(self, capsys):
        status, out, _ = run(capsys, ["info", *W_ARGS, "--distance"])
        assert status == 0
        lines = dict(line.split(" = ") for line in out.strip().splitlines())
        assert lines["k"] == "3"
        assert lines["kappa"] == "1"
        assert lines["separable"] == "false"
        assert lines["d"] == "2"
        assert lines["left projection"] == "1"
        assert lines["right projection"] == "x^2+x+1"
        assert lines["|C_r|"] == "8"

    def test_full_code(self, capsys):
        status, out, _ = run(
            capsys, ["info", "-r", "3", "-s", "3", "-b", "1", "-l", "0", "-a", "1",
                     "--distance"]
        )
        assert status == 0
        lines = dict(line.split(" = ") for line in out.strip().splitlines())
        assert lines["k"] == "6"
        assert lines["d"] == "1"

    def test_json_schema(self, capsys):
        status, out, _ = run(capsys, ["info", *W_ARGS, "--json"])
        assert status == 0
        report = json.loads(out)
        assert report["schema"] == 1
        assert report["k"] == 3
        assert report["cardinalities"]["C_s_perp"] == 4

    def test_invalid_spec_exits_2(self, capsys):
        status, _, err = run(
            capsys, ["info", "-r", "3", "-s", "3", "-b", "x+1", "-l", "1", "-a", "x+1"]
        )
        assert status == 2
        assert "remainder" in err

    def test_degenerate_length_exits_2(self, capsys):
        status, _, err = run(
            capsys, ["info", "-r", "0", "-s", "3", "-b", "1", "-l", "0", "-a", "1"]
        )
        assert status == 2

    def test_missing_flags_exits_2(self, capsys):
        status, _, err = run(capsys, ["info", "-r", "3", "-s", "3"])
        assert status == 2

    def test_parse_error_position(self, capsys):
        status, _, err = run(
            capsys, ["info", "-r", "3", "-s", "3", "-b", "x+2", "-l", "0", "-a", "1"]
        )
        assert status == 2
        assert "position" in err


class TestSpecFile:
    def test_json_spec_input(self, capsys, tmp_path):
        spec = tmp_path / "w.json"
        spec.write_text(
            json.dumps({"r": 3, "s": 3, "b": "x+1", "ell": "1", "a": "x^2+x+1"})
        )
        status, out, _ = run(capsys, ["info", "--spec", str(spec)])
        assert status == 0
        assert "k = 3" in out

    def test_missing_field(self, capsys, tmp_path):
        spec = tmp_path / "bad.json"
        spec.write_text(json.dumps({"r": 3, "s": 3}))
        status, _, err = run(capsys, ["info", "--spec", str(spec)])
        assert status == 2

    def test_dual_output_feeds_back_as_spec(self, capsys, tmp_path):
        status, out, _ = run(capsys, ["dual", *W_ARGS, "--json"])
        assert status == 0
        spec = tmp_path / "dual.json"
        spec.write_text(out)
        status, out, _ = run(capsys, ["info", "--spec", str(spec)])
        assert status == 0
        assert "k = 3" in out


class TestDual:
    def test_worked_instance(self, capsys):
        status, out, _ = run(capsys, ["dual", *W_ARGS])
        assert status == 0
        lines = dict(line.split(" = ") for line in out.strip().splitlines())
        assert lines["b"] == "x^3+1"
        assert lines["ell"] == "x^2+x+1"
        assert lines["a"] == "1"
        assert lines["rho"] == "1"
        assert lines["lambda"] == "1"

    def test_separable_path(self, capsys):
        status, out, _ = run(
            capsys, ["dual", "-r", "3", "-s", "3", "-b", "x+1", "-l", "0", "-a", "x+1"]
        )
        assert status == 0
        lines = dict(line.split(" = ") for line in out.strip().splitlines())
        assert lines["b"] == "x^2+x+1"
        assert lines["ell"] == "0"
        assert lines["a"] == "x^2+x+1"
        assert "rho" not in lines

    def test_check_flag(self, capsys):
        status, out, _ = run(capsys, ["dual", *W_ARGS, "--check"])
        assert status == 0
        assert "check = verified" in out


class TestMatrix:
    def test_rows(self, capsys):
        status, out, _ = run(capsys, ["matrix", *W_ARGS])
        assert status == 0
        assert out.splitlines() == ["110|000", "011|000", "100|111"]

    def test_standard(self, capsys):
        status, out, _ = run(capsys, ["matrix", *W_ARGS, "--standard"])
        assert status == 0
        lines = out.splitlines()
        assert lines[-1] == "columns = 0 1 2 4 5 3"
        assert lines[:-1] == ["101|000", "011|000", "001|111"]

    def test_zero_code(self, capsys):
        status, out, _ = run(
            capsys,
            ["matrix", "-r", "3", "-s", "3", "-b", "x^3+1", "-l", "0", "-a", "x^3+1"],
        )
        assert status == 0
        assert out == ""


class TestEnumerate:
    def test_csv_output(self, capsys):
        status, out, _ = run(capsys, ["enumerate", "-r", "1", "-s", "1"])
        assert status == 0
        lines = out.strip().splitlines()
        assert lines[0] == "r,s,b,ell,a,k,d,separable,selfdual"
        assert len(lines) == 1 + 5

    def test_csv_row_count_matches_scan(self, capsys):
        status, out, _ = run(capsys, ["enumerate", "-r", "2", "-s", "3"])
        assert status == 0
        assert len(out.strip().splitlines()) == 1 + 16

    def test_json_output(self, capsys):
        status, out, _ = run(capsys, ["enumerate", "-r", "1", "-s", "1", "--format", "json"])
        assert status == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert len(payload["entries"]) == 5
        ks = sorted(e["k"] for e in payload["entries"])
        assert ks == [0, 1, 1, 1, 2]

    def test_deterministic_bytes(self, capsys, tmp_path):
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        assert main(["enumerate", "-r", "2", "-s", "2", "-o", str(first)]) == 0
        assert main(["enumerate", "-r", "2", "-s", "2", "-o", str(second)]) == 0
        capsys.readouterr()
        assert first.read_bytes() == second.read_bytes()

    def test_cap_exit_3(self, capsys):
        status, _, err = run(capsys, ["enumerate", "-r", "9", "-s", "2"])
        assert status == 3

    def test_degenerate_exit_2(self, capsys):
        status, _, err = run(capsys, ["enumerate", "-r", "0", "-s", "2"])
        assert status == 2


class TestVerify:
    def test_all_pass(self, capsys):
        status, out, _ = run(capsys, ["verify", *W_ARGS])
        assert status == 0
        lines = out.strip().splitlines()
        assert len(lines) == 7
        assert all(line.endswith("PASS") for line in lines)

    def test_full_code_all_pass(self, capsys):
        status, out, _ = run(
            capsys, ["verify", "-r", "3", "-s", "3", "-b", "1", "-l", "0", "-a", "1"]
        )
        assert status == 0
        assert all(line.endswith("PASS") for line in out.strip().splitlines())

    def test_corrupt_negative_control(self, capsys):
        status, out, _ = run(capsys, ["verify", *W_ARGS, "--corrupt"])
        assert status == 1
        assert any(line.endswith("FAIL") for line in out.strip().splitlines())


class TestMindist:
    def test_value(self, capsys):
        status, out, _ = run(capsys, ["mindist", *W_ARGS])
        assert status == 0
        assert out.strip() == "d = 2"

    def test_zero_code(self, capsys):
        status, out, _ = run(
            capsys,
            ["mindist", "-r", "3", "-s", "3", "-b", "x^3+1", "-l", "0", "-a", "x^3+1"],
        )
        assert status == 0
        assert out.strip() == "d = none"

    def test_cap_exit_3(self, capsys):
        status, _, _ = run(
            capsys,
            ["mindist", "-r", "13", "-s", "13", "-b", "1", "-l", "0", "-a", "1"],
        )
        assert status == 3


class TestEncode:
    def test_worked_message(self, capsys):
        status, out, _ = run(capsys, ["encode", *W_ARGS, "-m", "111"])
        assert status == 0
        assert out.strip() == "001|111"

    def test_wrong_length_exit_2(self, capsys):
        status, _, _ = run(capsys, ["encode", *W_ARGS, "-m", "1"])
        assert status == 2

    def test_bad_characters_exit_2(self, capsys):
        status, _, _ = run(capsys, ["encode", *W_ARGS, "-m", "abc"])
        assert status == 2


def test_bitstring_grammar_accepted(capsys):
    status, out, _ = run(
        capsys, ["info", "-r", "3", "-s", "3", "-b", "11", "-l", "1", "-a", "111"]
    )
    assert status == 0
    assert "b = x+1" in out
