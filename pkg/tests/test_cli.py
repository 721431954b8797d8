"""CLI contract: JSON payloads, CSV schema, exit codes."""

import csv
import io
import json
import shutil
import subprocess

import pytest

from linsubres import cli
from linsubres.cli import CSV_HEADER, BenchRow, main, run_bench, run_verify
from linsubres.field import prime_field


def run_json(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return json.loads(captured.out)


def test_compute_generic(capsys):
    payload = run_json(
        capsys,
        ["compute", "--m", "2", "--n", "2", "--d", "1", "--alpha", "0", "--beta", "1"],
    )
    ops = payload.pop("ops")
    assert payload == {
        "m": 2, "n": 2, "d": 1, "alpha": "0", "beta": "1", "field": "q",
        "case": "generic", "basis": "monomial", "coeffs": ["1", "-2"],
    }
    assert set(ops) == {"add", "mul", "div"}


def test_compute_boundary_with_cofactors(capsys):
    payload = run_json(
        capsys,
        [
            "compute", "--m", "3", "--n", "3", "--d", "2",
            "--alpha", "2", "--beta", "1", "--field", "fp:3", "--cofactors",
        ],
    )
    assert payload["case"] == "boundary"
    assert payload["coeffs"] == ["1"]
    assert payload["cofactors"]["f"] == {"field": "fp:3", "coeffs": ["2"]}
    assert payload["cofactors"]["g"] == {"field": "fp:3", "coeffs": ["1"]}


def test_compute_vanishing(capsys):
    payload = run_json(
        capsys,
        [
            "compute", "--m", "5", "--n", "4", "--d", "1",
            "--alpha", "2", "--beta", "1", "--field", "fp:5",
        ],
    )
    assert payload["case"] == "vanishing"
    assert payload["coeffs"] == ["0", "0"]


def test_compute_bernstein(capsys):
    payload = run_json(
        capsys,
        [
            "compute", "--m", "4", "--n", "3", "--d", "2",
            "--alpha", "2", "--beta", "5", "--basis", "bernstein",
        ],
    )
    assert payload["basis"] == "bernstein"
    assert payload["prefactor"] == "9"
    assert payload["coeffs"] == ["3", "2", "1"]


def test_compute_rational_values(capsys):
    payload = run_json(
        capsys,
        ["compute", "--m", "1", "--n", "1", "--d", "0",
         "--alpha", "1/2", "--beta=-1/3"],
    )
    assert payload["coeffs"] == ["5/6"]


def test_psres_payload(capsys):
    payload = run_json(
        capsys, ["psres", "--m", "3", "--n", "3", "--alpha", "1", "--beta", "0"]
    )
    assert payload["psres"] == ["1", "6", "3"]
    assert set(payload["ops"]) == {"add", "mul", "div"}


def test_psres_degenerate_inputs(capsys):
    # alpha = beta is a valid request here: every entry is zero
    payload = run_json(
        capsys, ["psres", "--m", "2", "--n", "2", "--alpha", "1", "--beta", "1"]
    )
    assert payload["psres"] == ["0", "0"]
    payload = run_json(
        capsys, ["psres", "--m", "1", "--n", "5", "--alpha", "2", "--beta", "0"]
    )
    assert payload["psres"] == ["32"]


def test_exit_code_usage(capsys):
    # coincident roots
    assert main(["compute", "--m", "2", "--n", "2", "--d", "1",
                 "--alpha", "3", "--beta", "3"]) == 2
    assert "error:" in capsys.readouterr().err
    # composite modulus
    assert main(["compute", "--m", "2", "--n", "2", "--d", "1",
                 "--alpha", "0", "--beta", "1", "--field", "fp:4"]) == 2
    # index out of range
    assert main(["compute", "--m", "2", "--n", "3", "--d", "2",
                 "--alpha", "0", "--beta", "1"]) == 2
    # unreadable value
    assert main(["psres", "--m", "2", "--n", "2", "--alpha", "x", "--beta", "1"]) == 2
    # bad prime list
    assert main(["verify", "--primes", "4"]) == 2
    capsys.readouterr()


def test_exit_code_unsupported(capsys):
    assert main(["compute", "--m", "4", "--n", "4", "--d", "1",
                 "--alpha", "1", "--beta", "2", "--field", "fp:3"]) == 3
    err = capsys.readouterr().err
    assert "characteristic" in err
    assert main(["psres", "--m", "4", "--n", "4",
                 "--alpha", "1", "--beta", "2", "--field", "fp:5"]) == 3
    capsys.readouterr()


def test_missing_arguments_exit_two():
    with pytest.raises(SystemExit) as excinfo:
        main(["compute", "--m", "2"])
    assert excinfo.value.code == 2


def test_verify_small_run(capsys):
    code = main(["verify", "--max-degree", "2", "--primes", "5", "--seed", "1"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    for name in ("oracle", "jacobi", "pade", "bernstein"):
        assert any(line.startswith(f"{name}: PASS") for line in lines)
    assert lines[-1].startswith("PASS ")


def test_verify_single_suite(capsys):
    code = main(["verify", "--max-degree", "2", "--suite", "pade"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("pade: PASS")


def test_verify_failure_prints_counterexample(monkeypatch, capsys):
    def bad_suite(max_degree, primes, rng, report):
        report.record(True, {})
        report.record(False, {"suite": "oracle", "why": "forced"})

    monkeypatch.setitem(cli._SUITES, "oracle", bad_suite)
    code = main(["verify", "--suite", "oracle"])
    out = capsys.readouterr().out
    assert code == 4
    lines = out.strip().splitlines()
    assert lines[0] == "oracle: FAIL 1/2 cases"
    assert lines[1] == "FAIL 1/2 cases"
    assert lines[2] == "first counterexample:"
    assert json.loads(lines[3]) == {"suite": "oracle", "why": "forced"}


def test_bench_rows_and_schema():
    rows = run_bench([4, 8], prime_field(10007), oracle_cutoff=8)
    assert [(r.m, r.algorithm) for r in rows] == [
        (4, "fast"), (4, "psres_all"), (4, "oracle"),
        (8, "fast"), (8, "psres_all"), (8, "oracle"),
    ]
    by_key = {(r.m, r.algorithm): r for r in rows}
    assert by_key[(8, "fast")].muls < by_key[(8, "oracle")].muls
    assert all(r.d == r.m // 2 and r.field == "fp:10007" for r in rows)
    for row in rows:
        assert BenchRow.from_csv(row.to_csv()) == row


def test_bench_cutoff_skips_oracle():
    rows = run_bench([4, 8], prime_field(10007), oracle_cutoff=4)
    assert [(r.m, r.algorithm) for r in rows] == [
        (4, "fast"), (4, "psres_all"), (4, "oracle"),
        (8, "fast"), (8, "psres_all"),
    ]


def test_bench_csv_output(capsys, tmp_path):
    assert main(["bench", "--sizes", "4", "--oracle-cutoff", "0"]) == 0
    reader = csv.reader(io.StringIO(capsys.readouterr().out))
    table = list(reader)
    assert table[0] == CSV_HEADER
    assert len(table) == 3  # header + fast + psres_all
    assert table[1][4] == "fast"

    target = tmp_path / "bench.csv"
    assert main(["bench", "--sizes", "4", "--oracle-cutoff", "4",
                 "--csv", str(target)]) == 0
    capsys.readouterr()
    with open(target, newline="") as handle:
        table = list(csv.reader(handle))
    assert table[0] == CSV_HEADER
    assert {row[4] for row in table[1:]} == {"fast", "psres_all", "oracle"}


def test_bench_rejects_bad_sizes(capsys):
    assert main(["bench", "--sizes", "0"]) == 2
    assert main(["bench", "--sizes", ""]) == 2
    capsys.readouterr()


def test_bench_algorithm_selection(capsys):
    assert main(["bench", "--sizes", "64,128", "--algorithms", "fast"]) == 0
    table = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert len(table) == 3  # header + one row per size
    rows = [BenchRow.from_csv(row) for row in table[1:]]
    assert [(r.m, r.algorithm) for r in rows] == [(64, "fast"), (128, "fast")]
    assert rows[1].muls <= 2.5 * rows[0].muls + 200

    assert main(["bench", "--sizes", "8", "--field", "fp:101",
                 "--algorithms", "fast,oracle"]) == 0
    rows = [BenchRow.from_csv(row) for row in
            list(csv.reader(io.StringIO(capsys.readouterr().out)))[1:]]
    assert [r.algorithm for r in rows] == ["fast", "oracle"]
    fast, oracle = rows
    assert fast.adds + fast.muls + fast.divs < oracle.adds + oracle.muls + oracle.divs

    assert main(["bench", "--sizes", "16", "--field", "fp:101",
                 "--algorithms", "psres_all"]) == 0
    table = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert len(table) == 2


def test_bench_rejects_bad_algorithms(capsys):
    assert main(["bench", "--sizes", "4", "--algorithms", "slow"]) == 2
    assert "bad algorithm list" in capsys.readouterr().err


def test_console_script_installed():
    path = shutil.which("linsubres")
    assert path, "console script linsubres not on PATH"
    proc = subprocess.run(
        [path, "compute", "--m", "2", "--n", "2", "--d", "1",
         "--alpha", "0", "--beta", "1"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coeffs"] == ["1", "-2"]
