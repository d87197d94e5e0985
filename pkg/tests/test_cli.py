import json
import math
import subprocess
import sys

import numpy as np
import pytest

from tangenttri import sampling
from tangenttri.cli import fmt_float, main, to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_density_csv(capsys):
    code, out, _ = run(capsys, "density", "--model", "incircle", "--from", "2", "--to", "20", "--steps", "10")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "l,density"
    assert lines[1] == "2,0"
    assert len(lines) == 12 and lines[-1] == ""
    assert "\r" not in out


def test_density_single_value(capsys):
    code, out, _ = run(capsys, "density", "--model", "single", "--from", "1", "--to", "2", "--steps", "2")
    assert code == 0
    l, d = out.splitlines()[1].split(",")
    assert float(l) == 1.0 and float(d) == pytest.approx(1 / math.pi, rel=1e-16)


@pytest.mark.parametrize("argv", [
    ["density", "--model", "single", "--from", "1", "--to", "1", "--steps", "1"],
    ["density", "--model", "single", "--from", "3", "--to", "1", "--steps", "5"],
    ["simulate", "acute", "--n", "0"],
    ["simulate", "acute", "--format", "csv"],
    ["median", "--tol", "-1"],
])
def test_validation_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["density", "--model", "bogus", "--from", "0", "--to", "1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["simulate", "side", "--seed", str(2 ** 64)])
    assert info.value.code == 2


def test_numeric_failure_exit_3(capsys):
    code, _, err = run(capsys, "median", "--model", "naive", "--tol", "1e-300")
    assert code == 3 and "numerical failure" in err


def test_cdf_table(capsys):
    code, out, _ = run(capsys, "cdf", "--model", "single", "--from", "0", "--to", "1", "--steps", "3")
    rows = [r.split(",") for r in out.splitlines()[1:]]
    assert out.startswith("l,cdf\n")
    assert float(rows[0][1]) == 0.0 and abs(float(rows[-1][1]) - 0.5) < 1e-12


def test_median_reports(capsys):
    code, out, _ = run(capsys, "median", "--model", "incircle")
    rep = json.loads(out)
    assert code == 0 and rep["model"] == "incircle"
    assert abs(rep["median"] - 5.5482039188784452776) < 1e-11
    assert rep["achieved_tol"] < 1e-12
    _, out, _ = run(capsys, "median", "--model", "single")
    assert json.loads(out)["median"] == pytest.approx(1.0, abs=1e-12)


def test_median_naive_against_samples(capsys):
    _, out, _ = run(capsys, "median", "--model", "naive")
    med = json.loads(out)["median"]
    x = sampling.sample_side_naive(sampling.make_rng(77), 10 ** 6)
    assert abs(np.median(x) - med) < 0.01


def test_median_digits(capsys):
    _, out, _ = run(capsys, "median", "--digits", "25")
    assert json.loads(out)["median_digits"].startswith("5.5482039188784452776")


def test_simulate_acute(capsys):
    code, out, _ = run(capsys, "simulate", "acute", "--n", "1000000", "--seed", "7")
    rep = json.loads(out)
    assert code == 0 and abs(rep["estimate"] - 0.25) < 0.002


def test_simulate_side_ks(capsys):
    _, out, _ = run(capsys, "simulate", "side", "--n", "100000", "--seed", "7")
    rep = json.loads(out)
    assert rep["extra"]["ks"] < 0.006
    assert rep["histogram"][-1]["bin_hi"] == "inf"
    assert sum(b["count"] for b in rep["histogram"]) == 100000


def test_simulate_histogram_csv(capsys, tmp_path):
    path = tmp_path / "hist.csv"
    code, out, _ = run(capsys, "simulate", "perimeter", "--n", "20000", "--seed", "3", "--bins", "5",
                       "--hist", str(path))
    assert code == 0
    text = path.read_bytes().decode()
    assert text.startswith("bin_lo,bin_hi,count\n") and len(text.splitlines()) == 7
    _, csv_out, _ = run(capsys, "simulate", "perimeter", "--n", "20000", "--seed", "3", "--bins", "5",
                        "--format", "csv")
    assert csv_out == text


def test_simulate_alpha(capsys):
    _, out, _ = run(capsys, "simulate", "alpha", "--n", "100000", "--seed", "1")
    rep = json.loads(out)
    assert abs(rep["estimate"] - math.pi / 3) < 4 * rep["std_error"]


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("TANGENTTRI_SEED", "123")
    _, out, _ = run(capsys, "simulate", "acute", "--n", "1000")
    assert json.loads(out)["seed"] == 123
    _, explicit, _ = run(capsys, "simulate", "acute", "--n", "1000", "--seed", "123")
    assert out == explicit


def test_out_path(capsys, tmp_path):
    path = tmp_path / "opt.json"
    code, out, _ = run(capsys, "optimize", "perimeter", "--out", str(path))
    assert code == 0 and out == ""
    rep = json.loads(path.read_text())
    assert rep["closed"] == pytest.approx(6 * math.sqrt(3), abs=1e-12)
    assert f"{rep['closed']:.5f}" == "10.39230"


def test_optimize_two_sides(capsys):
    _, out, _ = run(capsys, "optimize", "two-sides")
    rep = json.loads(out)
    assert math.floor(rep["closed"]["sum_uv"] * 1e5) / 1e5 == 6.66038
    assert rep["abs_difference"]["sum_uv"] < 1e-9
    assert math.floor(rep["closed"]["apex_angle_rad"] * 1e5) / 1e5 == 1.33247
    assert math.floor(rep["closed"]["apex_angle_deg"] * 100) / 100 == 76.34
    for key in ("w_star", "sum_uv", "apex_angle_rad", "apex_angle_deg", "cos_apex"):
        assert key in rep["numeric"]


def test_seventeen_digits():
    assert fmt_float(0.1) == "0.10000000000000001"
    assert to_json({"x": 1 / 3}) == '{\n  "x": 0.33333333333333331\n}'
    assert json.loads(to_json({"a": [math.inf, 1, True, None, "s"]})) == {"a": ["inf", 1, True, None, "s"]}


@pytest.mark.parametrize("kind", ["side", "perimeter", "acute", "alpha"])
def test_simulate_byte_identical_subprocess(kind):
    cmd = [sys.executable, "-m", "tangenttri", "simulate", kind, "--n", "20000", "--seed", "5", "--shards", "4"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
