import json
import subprocess
import sys

import pytest

from skeintrace.cli import run

L0 = "[Z_inf^-1 Z_1^-1] + [Z_inf^-1 Z_1^1] + [Z_inf^1 Z_1^1]"


def out(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.rstrip("\n"), captured.err


def test_trace_example(capsys):
    assert out(capsys, "trace", "--fixture", "punctured_torus", "--curve", "L0", "--mode", "generic",
               "--param", "iota") == (0, L0, "")


def test_verify_frobenius_example(capsys):
    code, text, _ = out(capsys, "verify", "frobenius", "--fixture", "punctured_torus", "--curve", "L0", "--n", "3")
    assert (code, text) == (0, "OK")


def test_verify_failure_exit_code(capsys):
    code, text, _ = out(capsys, "verify", "frobenius", "--fixture", "punctured_torus", "--curve", "L0",
                        "--n", "3", "--mode", "generic")
    assert code == 1 and text.startswith("FAIL")


def test_fixtures_list(capsys):
    assert out(capsys, "fixtures", "list")[:2] == (0, "punctured_torus\ntwice_punctured_plane")


def test_fixture_show_is_loadable(capsys, tmp_path):
    code, text, _ = out(capsys, "fixtures", "show", "punctured_torus")
    path = tmp_path / "surface.json"
    path.write_text(text)
    assert out(capsys, "trace", "--input", str(path), "--curve", "L0")[:2] == (0, L0)


def test_report_json(capsys):
    code, text, _ = out(capsys, "thread", "--poly", "T", "--n", "3", "--fixture", "punctured_torus",
                        "--curve", "L0", "--mode", "root:12", "--report", "json")
    data = json.loads(text)
    assert code == 0 and data["surviving"] == 3 and data["admissible"] == 3


def test_verify_identities_report(capsys):
    code, text, _ = out(capsys, "verify", "identities", "--fixture", "punctured_torus", "--n", "3", "--report", "json")
    data = json.loads(text)
    assert code == 0 and data["failed"] == 0 and data["passed"] == 4


def test_jw_commands(capsys):
    assert out(capsys, "jw", "trace-biangle", "--n", "2", "--s1", "+-", "--s2", "-+")[:2] == (0, "w^4 / (1 + w^8)")
    assert out(capsys, "jw", "trace-biangle", "--n", "2", "--s1", "--", "--s2", "--")[:2] == (0, "1")
    code, text, _ = out(capsys, "jw", "expand", "--n", "2")
    assert code == 0 and "<L0-R0 L1-R1>" in text


def test_sigma(capsys):
    assert out(capsys, "sigma", "--fixture", "punctured_torus")[:2] == (0, " 0  -2   2\n 2   0  -2\n-2   2   0")


@pytest.mark.parametrize("argv", [
    ["trace", "--fixture", "punctured_torus", "--curve", "L0", "--mode", "root:x"],
    ["trace", "--fixture", "punctured_torus", "--curve", "nope"],
    ["trace", "--fixture", "punctured_torus"],
    ["thread", "--poly", "S", "--n", "3", "--fixture", "punctured_torus", "--curve", "Lm1", "--mode", "root:12"],
    ["jw", "trace-biangle", "--n", "2", "--s1", "+"],
    ["trace", "--input", "/nonexistent.json", "--curve", "L0"],
])
def test_input_errors_exit_2(capsys, argv):
    assert run(argv) == 2
    assert capsys.readouterr().err


@pytest.mark.parametrize("argv", [["trace", "--bogus"], ["frobnicate"], ["verify", "frobenius"]])
def test_usage_errors_print_schema(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2
    assert "surface JSON" in capsys.readouterr().err


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "skeintrace", "thread", "--poly", "S", "--n", "3",
           "--fixture", "twice_punctured_plane", "--curve", "L1"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True, env={"PYTHONHASHSEED": "7"}).stdout
    assert first == second and first.strip()
