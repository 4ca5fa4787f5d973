import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from brauer_relations import cli

SCHEMA = json.loads(resources.files("brauer_relations").joinpath("report.schema.json").read_text())


def invoke(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def invoke_json(capsys, *argv):
    code, out, _ = invoke(capsys, *argv, "--json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


def test_verify_frobenius_21(capsys):
    code, out, _ = invoke(capsys, "verify", "sd(7,3,2)")
    assert code == 0
    assert "[1]·{1} + [-3]·C3 + [-1]·C7 + [3]·G" in out
    assert "PASS" in out


def test_verify_json_fields(capsys):
    code, data = invoke_json(capsys, "verify", "sd(7,3,2)")
    assert code == 0
    assert data["classification"] == {"kind": "PQuasiElementary", "p": 3}
    assert data["predicted_d"] == data["computed_d"] == 3
    assert [t["coeff"] for t in data["witness"]] == [1, -3, -1, 3]
    assert data["pass"] is True


def test_ideal_cyclic(capsys):
    code, data = invoke_json(capsys, "ideal", "C12")
    assert code == 0 and data["computed_d"] == 0 and data["classification"]["kind"] == "Cyclic"


def test_verify_s4(capsys):
    code, data = invoke_json(capsys, "verify", "S4")
    assert code == 0
    assert data["computed_d"] == 1 and data["classification"] == {"kind": "NotQuasiElementary"}


@pytest.mark.parametrize("command", cli.COMMANDS)
@pytest.mark.parametrize("spec", ["C1", "Q8", "D6", "C2 x C2"])
def test_every_command_validates(capsys, command, spec):
    code, data = invoke_json(capsys, command, spec)
    assert code == 0
    assert data["spec"] == spec


def test_lattice_json(capsys):
    _, data = invoke_json(capsys, "lattice", "S3")
    assert data["rank"] == 1
    assert [c["label"] for c in data["classes"]] == ["{1}", "C2", "C3", "G"]
    assert [[t["coeff"] for t in b] for b in data["basis"]] == [[1, -2, -1, 2]]


@pytest.mark.parametrize("spec", ["sd(7,3,3)", "C", "X4", "S9", "perm(3;(1,4))"])
def test_input_errors_exit_2(capsys, spec):
    code, out, err = invoke(capsys, "verify", spec)
    assert code == 2 and out == "" and err.startswith("error:")
    code, data = invoke_json(capsys, "verify", spec)
    assert code == 2 and "error" in data


def test_max_order_flag(capsys):
    assert invoke(capsys, "ideal", "C20", "--max-order", "10")[0] == 2
    # values above the ceiling are clamped rather than honoured
    code, data = invoke_json(capsys, "ideal", "C2001", "--max-order", "5000")
    assert code == 2 and data["error"]["type"] == "GroupTooLargeError"


def test_mismatch_exit_1(capsys, monkeypatch):
    real = cli._command_data

    def broken(command, spec_text, max_order):
        data = real(command, spec_text, max_order)
        data["pass"] = False
        return data

    monkeypatch.setattr(cli, "_command_data", broken)
    assert invoke(capsys, "verify", "S3")[0] == 1


def test_no_timing_is_null(capsys):
    _, data = invoke_json(capsys, "verify", "S3", "--no-timing")
    assert data["ms"] is None
    _, data = invoke_json(capsys, "verify", "S3")
    assert data["ms"] >= 0


def test_human_and_json_agree(capsys):
    for spec in ("sd(7,3,2)", "S4", "C12", "Q8"):
        _, data = invoke_json(capsys, "verify", spec)
        _, out, _ = invoke(capsys, "verify", spec)
        lines = dict(line.split(":", 1) for line in out.splitlines() if ":" in line)
        lines = {k.strip(): v.strip() for k, v in lines.items()}
        assert lines["spec"] == data["spec"]
        assert int(lines["order"]) == data["order"]
        assert int(lines["computed d"]) == data["computed_d"]
        assert int(lines["predicted d"]) == data["predicted_d"]
        assert int(lines["lattice rank"]) == data["rank"]
        assert lines["result"] == ("PASS" if data["pass"] else "FAIL")


def write(tmp_path, text):
    path = tmp_path / "cat.txt"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_sweep_small_catalog(capsys, tmp_path):
    path = write(tmp_path, "# cyclic only\nC1\n\nC6   # six\nC12\n")
    code, data = invoke_json(capsys, "sweep", path, "--no-timing")
    assert code == 0
    assert data["summary"] == {"total": 3, "passed": 3, "failed": 0, "errors": 0}
    assert [(r["line"], r["spec"]) for r in data["results"]] == [(2, "C1"), (4, "C6"), (5, "C12")]


def test_sweep_isolates_bad_line(capsys, tmp_path):
    path = write(tmp_path, "S3\nsd(7,3,3)\nQ8\nC(\n")
    code, data = invoke_json(capsys, "sweep", path)
    assert code == 2
    assert data["summary"] == {"total": 4, "passed": 2, "failed": 0, "errors": 2}
    assert ["error" in r for r in data["results"]] == [False, True, False, True]
    assert data["results"][2]["pass"] is True


def test_sweep_human(capsys, tmp_path):
    path = write(tmp_path, "S3\nbogus\n")
    code, out, _ = invoke(capsys, "sweep", path)
    assert code == 2
    lines = out.splitlines()
    assert lines[0].startswith("PASS") and lines[1].startswith("ERROR")
    assert lines[-1] == "2 groups: 1 passed, 0 failed, 1 input errors"


def test_sweep_jobs_deterministic(capsys, tmp_path):
    path = write(tmp_path, "\n".join(["S3", "Q8", "D9", "bad", "A4", "sd(7,3,2)", "C2 x C2"]))
    _, one, _ = invoke(capsys, "sweep", path, "--json", "--no-timing", "--jobs", "1")
    _, four, _ = invoke(capsys, "sweep", path, "--json", "--no-timing", "--jobs", "4")
    assert one == four


def test_sweep_unreadable(capsys, tmp_path):
    missing = str(tmp_path / "nope.txt")
    code, out, err = invoke(capsys, "sweep", missing)
    assert code == 2 and "cannot read" in err
    code, data = invoke_json(capsys, "sweep", missing)
    assert code == 2 and data["error"]["type"] == "FileNotFoundError"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "brauer_relations", "ideal", "S3", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["computed_d"] == 2
