import math

import pytest

from noma_aloha.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ladder_worked_example(capsys):
    code, out, _ = run_cli(capsys, "ladder", "--gamma-db", "3.0103", "--q", "4")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines() if line and not line.startswith(("#", "level"))]
    powers = [float(r[1]) for r in rows]
    assert powers == pytest.approx([54, 18, 6, 2], abs=0.01)


def test_ladder_0db_single_level(capsys):
    code, out, _ = run_cli(capsys, "ladder", "--gamma-db", "0", "--q", "1")
    assert code == 0
    assert out.splitlines()[-1].startswith("1,1.0,")


def test_ladder_q0_usage_error(capsys):
    code, _, err = run_cli(capsys, "ladder", "--q", "0")
    assert code == 2
    assert "num_levels" in err


def test_bounds(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--q", "1", "--lambda", "1")
    assert code == 0
    assert f"upper={math.exp(-1.0)!r}" in out
    assert f"lower={math.exp(-1.0)!r}" in out


def test_oracle_report(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--q", "2", "--lambda", "1.5", "--gamma-db", "4")
    assert code == 0
    assert "oracle=" in out and "truncation_bound=" in out and "states=" in out


def test_oracle_large_q_exit_2(capsys):
    code, _, err = run_cli(capsys, "oracle", "--q", "7", "--lambda", "1")
    assert code == 2
    assert "simulate" in err


def test_simulate_deterministic_stdout(capsys):
    args = ["simulate", "--q", "1", "--gamma-db", "4", "--lambda", "1",
            "--slots", "200000", "--seed", "7"]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    mean = float(out1.split("per_channel_mean=")[1].split()[0])
    se = float(out1.split("std_error=")[1].split()[0])
    assert abs(mean - math.exp(-1.0)) <= 4 * se


def test_simulate_channels_multiplier(capsys):
    code, out, _ = run_cli(capsys, "simulate", "--q", "2", "--lambda", "1",
                           "--slots", "10000", "--seed", "3", "--channels", "5")
    assert code == 0
    mean = float(out.split("per_channel_mean=")[1].split()[0])
    total = float(out.split("total_mean=")[1].split()[0])
    assert total == 5 * mean


def test_figure1_csv_structure(tmp_path, capsys):
    path = tmp_path / "fig1.csv"
    code, _, _ = run_cli(capsys, "figure1", "--q", "2", "--lambda-min", "0.5",
                         "--lambda-max", "1.5", "--lambda-step", "0.5",
                         "--slots", "20000", "--seed", "5", "--output", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    manifest = [l for l in lines if l.startswith("#")]
    assert any(l.startswith("# seed=5") for l in manifest)
    assert any("rng=splitmix64-counter-v1" in l for l in manifest)
    header = [l for l in lines if not l.startswith("#")][0]
    assert header == "lambda,upper,lower,sim_mean,sim_se,n_slots"
    rows = [l.split(",") for l in lines if not l.startswith("#")][1:]
    assert [float(r[0]) for r in rows] == [0.5, 1.0, 1.5]
    for r in rows:
        lam, up, lo = float(r[0]), float(r[1]), float(r[2])
        assert lo <= up


def test_figure1_byte_identical_rerun(tmp_path, capsys):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["figure1", "--q", "4", "--lambda-min", "1", "--lambda-max", "2",
            "--lambda-step", "1", "--slots", "30000", "--seed", "9"]
    assert run_cli(capsys, *args, "--output", str(p1))[0] == 0
    assert run_cli(capsys, *args, "--output", str(p2))[0] == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_figure1_unwritable_path_exit_3(capsys):
    code, _, err = run_cli(capsys, "figure1", "--q", "2", "--slots", "1000",
                           "--lambda-min", "1", "--lambda-max", "1", "--lambda-step", "1",
                           "--output", "/nonexistent-dir/x.csv")
    assert code == 3
    assert "I/O" in err


def test_figure2_q1_row(tmp_path, capsys):
    path = tmp_path / "fig2.csv"
    code, _, _ = run_cli(capsys, "figure2", "--q-list", "1", "--slots", "200000",
                         "--seed", "2", "--output", str(path))
    assert code == 0
    lines = [l for l in path.read_text().splitlines() if not l.startswith("#")]
    assert lines[0].startswith("q,lambda_ub,lambda_lb,")
    row = lines[1].split(",")
    q, lam_ub, lam_lb = int(row[0]), float(row[1]), float(row[2])
    assert q == 1
    assert lam_ub == pytest.approx(1.0, abs=1e-4)
    assert lam_lb == 1.0
    for v in (float(row[3]), float(row[4]), float(row[5]), float(row[7])):
        assert v == pytest.approx(math.exp(-1.0), abs=0.01)


def test_figure2_q_list_range_parsing(tmp_path, capsys):
    path = tmp_path / "fig2.csv"
    code, _, _ = run_cli(capsys, "figure2", "--q-list", "1..3", "--slots", "1000",
                         "--seed", "2", "--output", str(path))
    assert code == 0
    rows = [l for l in path.read_text().splitlines() if not l.startswith(("#", "q,"))]
    assert [int(r.split(",")[0]) for r in rows] == [1, 2, 3]
