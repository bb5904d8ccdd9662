"""End-to-end tests for the command-line interface.

Logic-level tests call main() in process; the byte-identity tests spawn real
interpreter subprocesses so they exercise the same path a shell user does.
"""

import json
import subprocess
import sys

import pytest

from emconf.cli import CSV_HEADER, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_proc(*argv, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "emconf.cli", *argv],
        capture_output=True,
        text=True,
        env=full_env,
    )


def parse_csv(out):
    lines = out.strip().split("\n")
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    return rows


# -- transform ----------------------------------------------------------------


def test_transform_uniform_inversion_single_point(capsys):
    """Unit uniform field at (1,0,0,0): the inversion fixes it with scale 1."""
    code, out, _ = run_cli(
        capsys,
        "transform", "--field", "uniform", "--E0", "1,0,0",
        "--xform", "inversion", "--eps", "1", "--grid", "t=1:1:1",
    )
    assert code == 0
    assert out.split("\n")[0] == CSV_HEADER
    row = parse_csv(out)[0]
    assert float(row["Exp"]) == pytest.approx(1.0, abs=1e-15)
    assert float(row["Eyp"]) == 0.0 and float(row["Bzp"]) == 0.0
    assert float(row["scale"]) == pytest.approx(1.0, abs=1e-15)
    assert row["skipped"] == "0"


def test_transform_sct_zero_vector_is_identity(capsys):
    code, out, _ = run_cli(
        capsys,
        "transform", "--field", "uniform", "--E0", "0.3,0.7,-0.2", "--B0", "1,0,2",
        "--xform", "sct", "--a", "0,0,0,0", "--grid", "t=0:2:3,x=1:1:1",
    )
    assert code == 0
    for row in parse_csv(out):
        for col in ("Ex", "Ey", "Ez", "Bx", "By", "Bz"):
            assert float(row[col + "p"]) == pytest.approx(float(row[col]), abs=1e-15)
        assert float(row["scale"]) == 1.0


def test_transform_lightcone_row_skipped(capsys):
    code, out, _ = run_cli(
        capsys,
        "transform", "--field", "uniform", "--E0", "1,0,0",
        "--xform", "inversion", "--grid", "t=1:1:1,x=0:1:2",
    )
    assert code == 0
    rows = parse_csv(out)
    assert rows[0]["skipped"] == "0"
    # (1,1,0,0) sits on the light cone: coordinates kept, fields blanked
    assert rows[1]["skipped"] == "1"
    assert rows[1]["Ex"] == "" and rows[1]["scale"] == ""
    assert rows[1]["t"] == "1" and rows[1]["x"] == "1"


def test_transform_json_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "transform", "--field", "uniform", "--E0", "1,0,0",
        "--xform", "inversion", "--grid", "t=1:1:1,x=0:1:2",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert [r["skipped"] for r in rows] == [False, True]
    assert rows[1]["Ex"] is None and rows[1]["scale"] is None
    assert set(rows[0]) == set(CSV_HEADER.split(","))


def test_transform_frame_consistency(capsys):
    """A transformed-frame sweep at the image point matches the original-frame
    transform of the same source event."""
    code, orig_out, _ = run_cli(
        capsys,
        "transform", "--field", "coulomb", "--q", "1",
        "--xform", "inversion", "--grid", "x=2:2:1",
    )
    assert code == 0
    # image of (0,2,0,0) under eps=+1 inversion is (0,-0.5,0,0)
    code, trans_out, _ = run_cli(
        capsys,
        "transform", "--field", "coulomb", "--q", "1",
        "--xform", "inversion", "--grid", "x=-0.5:-0.5:1", "--frame", "transformed",
    )
    assert code == 0
    row_o = parse_csv(orig_out)[0]
    row_t = parse_csv(trans_out)[0]
    for col in ("Exp", "Eyp", "Ezp", "Bxp", "Byp", "Bzp"):
        assert float(row_t[col]) == pytest.approx(float(row_o[col]), rel=1e-12)


def test_transform_all_skipped_exits_one(capsys):
    code, out, err = run_cli(
        capsys,
        "transform", "--field", "uniform", "--E0", "1,0,0",
        "--xform", "inversion", "--grid", "t=1:1:1,x=1:1:1",
    )
    assert code == 1
    assert "skipped" in err
    assert parse_csv(out)[0]["skipped"] == "1"


def test_transform_job_file_with_flag_override(tmp_path, capsys):
    job = {
        "field": {"kind": "uniform", "E0": [1, 0, 0]},
        "xform": {"kind": "inversion", "eps": 1},
        "grid": {"t": {"min": 1, "max": 1, "count": 1}},
        "format": "json",
    }
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    code, out, _ = run_cli(capsys, "transform", "--job", str(path))
    assert code == 0
    assert json.loads(out)[0]["Exp"] == 1.0
    # a flag overrides the job's format
    code, out, _ = run_cli(capsys, "transform", "--job", str(path), "--format", "csv")
    assert code == 0
    assert out.startswith(CSV_HEADER)


def test_transform_output_file(tmp_path, capsys):
    path = tmp_path / "rows.csv"
    code, out, _ = run_cli(
        capsys,
        "transform", "--field", "uniform", "--E0", "1,0,0",
        "--xform", "dilation", "--lambda", "2.0", "--grid", "t=1:1:1",
        "--out", str(path),
    )
    assert code == 0 and out == ""
    row = parse_csv(path.read_text())[0]
    assert float(row["Exp"]) == pytest.approx(4.0)  # field weight is factor^2
    assert float(row["scale"]) == 2.0


def test_transform_malformed_inputs_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli(capsys, "transform", "--job", str(bad))[0] == 2
    # missing transformation
    code, _, err = run_cli(capsys, "transform", "--field", "uniform")
    assert code == 2 and "transformation" in err
    # bad grid axis counts
    job = tmp_path / "grid.json"
    job.write_text(json.dumps({
        "field": {"kind": "uniform"},
        "xform": {"kind": "inversion"},
        "grid": {"t": {"min": 0, "max": 1, "count": 0}},
    }))
    assert run_cli(capsys, "transform", "--job", str(job))[0] == 2
    # argparse rejects malformed vectors on its own
    with pytest.raises(SystemExit) as exc:
        main(["transform", "--field", "uniform", "--E0", "1,2"])
    assert exc.value.code == 2


def test_lorentz_boost_through_cli(capsys):
    import math

    code, out, _ = run_cli(
        capsys,
        "transform", "--field", "uniform", "--E0", "0,1,0",
        "--xform", "lorentz", "--boost", "0.25,0,0", "--grid", "t=0:0:1",
    )
    assert code == 0
    row = parse_csv(out)[0]
    assert float(row["Eyp"]) == pytest.approx(math.cosh(0.5), rel=1e-14)
    assert float(row["Bzp"]) == pytest.approx(math.sinh(0.5), rel=1e-14)


# -- invariants -----------------------------------------------------------------


def test_invariants_report(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariants", "--field", "uniform", "--E0", "1,0,0", "--B0", "0.5,0,0",
        "--xform", "inversion", "--point", "2,0,0,0",
    )
    assert code == 0
    report = json.loads(out)
    assert report["i1"] == pytest.approx(0.75)
    assert report["i2"] == pytest.approx(1.0)
    assert report["scale"] == pytest.approx(4.0)
    assert report["factor_i1"] == pytest.approx(256.0)
    assert report["factor_i2"] == pytest.approx(-256.0)
    assert report["rel_dev_i1"] < 1e-10
    assert report["rel_dev_i2"] < 1e-10


def test_invariants_lightcone_exits_one(capsys):
    code, _, err = run_cli(
        capsys,
        "invariants", "--field", "uniform", "--E0", "1,0,0",
        "--xform", "inversion", "--point", "1,1,0,0",
    )
    assert code == 1
    assert "light cone" in err


# -- verify ---------------------------------------------------------------------


def test_verify_small_run(capsys):
    code, out, err = run_cli(capsys, "verify", "--seed", "9", "--trials", "5")
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert report["seed"] == 9
    assert {c["check_id"] for c in report["checks"]} >= {
        "blade_products",
        "three_way_agreement",
        "invariant_scaling",
    }
    assert all(
        set(c) == {"check_id", "trials", "max_abs_dev", "tolerance", "pass"}
        for c in report["checks"]
    )
    assert "16/16" in err


def test_verify_zero_tolerance_exits_one(capsys):
    code, out, _ = run_cli(capsys, "verify", "--trials", "5", "--tol", "0")
    assert code == 1
    report = json.loads(out)
    assert report["pass"] is False
    assert any(c["max_abs_dev"] > 0 for c in report["checks"] if not c["pass"])


def test_verify_rejects_bad_arguments(capsys):
    assert run_cli(capsys, "verify", "--trials", "0")[0] == 2
    assert run_cli(capsys, "verify", "--tol", "-1")[0] == 2


def test_verify_byte_identical_across_processes():
    first = run_proc("verify", "--seed", "11", "--trials", "10")
    second = run_proc("verify", "--seed", "11", "--trials", "10")
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout


def test_verify_seed_from_environment():
    proc = run_proc("verify", "--trials", "5", env={"EMCONF_SEED": "123"})
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["seed"] == 123
    # a malformed environment seed is a usage error
    proc = run_proc("verify", "--trials", "5", env={"EMCONF_SEED": "abc"})
    assert proc.returncode == 2


def test_transform_byte_identical_across_processes():
    argv = (
        "transform", "--field", "planewave", "--E0", "1,0,0", "--khat", "0,0,1",
        "--xform", "sct", "--a", "0.1,0,0.2,0", "--grid", "t=0:2:7,z=-1:1:3",
    )
    first = run_proc(*argv)
    second = run_proc(*argv)
    assert first.returncode == 0
    assert first.stdout == second.stdout
