import json
import subprocess
import sys

import pytest

from fddof.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_dof_hd_users(capsys):
    code, out, _ = run(["dof", "-M1", "2", "-M2", "2", "-N1", "1", "-N2", "4"], capsys)
    assert code == 0
    assert "sum DoF: 5/2" in out
    assert "agreement: yes" in out


def test_dof_fd_users(capsys):
    code, out, _ = run(["dof", "--fd-users", "-M1", "5", "-M2", "5", "-N", "30"], capsys)
    assert code == 0 and "sum DoF: 10" in out


def test_dof_without_users(capsys):
    code, out, _ = run(["dof", "-M1", "3", "-M2", "3", "-N1", "0", "-N2", "0"], capsys)
    assert code == 0 and "sum DoF: 0" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["dof", "-M1", "2", "-M2", "2"],
        ["dof", "-M1", "-1", "-M2", "2", "-N1", "1", "-N2", "1"],
        ["dof", "--fd-users", "-M1", "1", "-M2", "1"],
        ["verify-grid", "-B", "0"],
        ["figure", "nope"],
        ["ia", "-M2", "5", "-N2", "3"],
        ["ia", "-M2", "1", "-N1", "2", "-N2", "3"],
        ["slope", "-M2", "1", "-N2", "2", "--points", "2"],
        ["slope", "-M2", "1", "-N2", "2", "--log10-pmax", "4"],
        ["ia", "-M2", "1", "-N2", "2", "--seed", "-3"],
    ],
)
def test_usage_errors_exit_64(argv, capsys):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 64


def test_unsupported_regime_message(capsys):
    code, _, err = run(["ia", "-M2", "5", "-N2", "3"], capsys)
    assert code == 64 and "unsupported regime" in err


def test_verify_grid(capsys):
    code, out, _ = run(["verify-grid", "-B", "3"], capsys)
    assert code == 0
    assert out.startswith("81 configs, 0 mismatches")


def test_ia_ok(capsys):
    code, out, _ = run(["ia", "-M2", "2", "-N2", "4", "--trials", "100", "--seed", "1"], capsys)
    assert code == 0
    assert "0 failures" in out and "5/2" in out


def test_ia_failure_exits_2(capsys):
    # An absurd tolerance flags every rank as deficient.
    code, out, _ = run(["ia", "-M2", "1", "-N2", "3", "--trials", "2", "--tol", "2"], capsys)
    assert code == 2 and "failed trials: 0 1" in out


def test_ia_json(capsys):
    code, out, _ = run(["ia", "-M2", "1", "-N2", "2", "--trials", "3", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["symbols_per_slot"] == "3/2" and data["failures"] == 0


def test_slope_json(capsys):
    code, out, _ = run(["slope", "-M2", "2", "-N2", "4", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["expected"] == "5/2"
    assert len(data["points"]) == 9
    assert abs(data["slope"] - 2.5) / 2.5 <= 0.10


def test_figure_csv(capsys):
    code, out, _ = run(["figure", "fd-sweep", "--n-min", "10", "--n-max", "10"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n1,n2,n,fd-bs-hd-user,fd-bs-fd-user,fd-with-si,hd-only"
    assert lines[1].split(",")[5] == "14.000000"


def test_figure_json(capsys):
    code, out, _ = run(["figure", "ex1", "--n-max", "3", "--format", "json"], capsys)
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [1, 2, 3]
    assert rows[2]["fd-bs-hd-user"] == {"exact": "3/1", "decimal": "3.000000"}


@pytest.mark.parametrize(
    "argv",
    [
        ["figure", "optimal-split", "--n-max", "20"],
        ["ia", "-M2", "2", "-N2", "4", "--trials", "20", "--seed", "9"],
        ["slope", "-M2", "1", "-N2", "2", "--trials", "5", "--seed", "4", "--format", "json"],
    ],
)
def test_out_file_is_byte_identical(argv, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(argv + ["--out", str(a)]) == main(argv + ["--out", str(b)])
    assert a.read_bytes() == b.read_bytes() != b""


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fddof", "dof", "-M1", "10", "-M2", "10", "-N1", "1", "-N2", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "sum DoF: 1" in proc.stdout
