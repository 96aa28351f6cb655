"""CLI: formats, parameter sources, exit codes, determinism."""

import json

import pytest

from trioct.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_csv(capsys):
    code, out, err = run_cli(capsys, "seq", "--preset", "tribonacci", "--n", "0..7", "--format", "csv")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "n,value"
    assert len(lines) == 9
    assert lines[-1] == "7,24"


def test_seq_text(capsys):
    code, out, _ = run_cli(capsys, "seq", "--preset", "padovan", "--n", "9", "--format", "text")
    assert code == 0
    assert out == "9: 4\n"


def test_seq_jsonl(capsys):
    code, out, _ = run_cli(capsys, "seq", "--preset", "narayana", "--n", "6..7", "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [{"n": 6, "value": "4"}, {"n": 7, "value": "6"}]


def test_oct_csv_jacobsthal(capsys):
    code, out, _ = run_cli(
        capsys, "oct", "--preset", "third-order-jacobsthal", "--n", "0", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,e0,e1,e2,e3,e4,e5,e6,e7"
    assert lines[1] == "0,0,1,1,2,5,9,18,37"


def test_oct_jsonl_schema(capsys):
    code, out, _ = run_cli(capsys, "oct", "--preset", "tribonacci", "--n", "0", "--format", "jsonl")
    assert code == 0
    row = json.loads(out)
    assert row == {"n": 0, "components": ["0", "1", "1", "2", "4", "7", "13", "24"]}


def test_sum_csv(capsys):
    code, out, _ = run_cli(capsys, "sum", "--preset", "tribonacci", "--n", "0..2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[-1] == "2,2,4,7,13,24,44,81,149"


def test_sum_delta_zero_falls_back_to_direct(capsys):
    code, out, _ = run_cli(
        capsys, "sum",
        "--r", "1", "--s", "1", "--t", "-1", "--v0", "0", "--v1", "1", "--v2", "1",
        "--n", "0..3", "--format", "csv",
    )
    assert code == 0
    # terms run 0,1,1,2,2,3,3,4,...; the n=0 row is the first lift itself
    lines = out.splitlines()
    assert lines[1] == "0,0,1,1,2,2,3,3,4"


def test_roots_labels(capsys):
    code, out, _ = run_cli(capsys, "roots", "--preset", "tribonacci")
    assert code == 0
    labels = [line.split(" = ")[0] for line in out.splitlines()]
    assert labels == [
        "alpha", "omega1", "omega2", "discriminant",
        "weight_alpha", "weight_omega1", "weight_omega2",
    ]
    alpha = float(out.splitlines()[0].split(" = ")[1])
    assert abs(alpha - 1.8392867552141612) < 1e-12


def test_roots_out_of_regime(capsys):
    code, out, err = run_cli(
        capsys, "roots", "--r", "0", "--s", "3", "--t", "0", "--v0", "0", "--v1", "1", "--v2", "1"
    )
    assert code == 1
    assert out == ""
    assert err.count("\n") == 1 and "discriminant" in err


def test_genfunc_output(capsys):
    code, out, _ = run_cli(capsys, "genfunc", "--preset", "tribonacci")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "e0: x"
    assert lines[1] == "e1: 1"
    assert lines[7] == "e7: 24 + 20x + 13x^2"
    assert lines[8] == "denominator: 1 - x - x^2 - x^3"


def test_explicit_params_match_preset(capsys):
    _, expected, _ = run_cli(capsys, "seq", "--preset", "tribonacci", "--n", "0..9", "--format", "csv")
    code, out, _ = run_cli(
        capsys, "seq",
        "--r", "1", "--s", "1", "--t", "1", "--v0", "0", "--v1", "1", "--v2", "1",
        "--n", "0..9", "--format", "csv",
    )
    assert code == 0
    assert out == expected


def test_rational_explicit_params(capsys):
    code, out, _ = run_cli(
        capsys, "seq",
        "--r", "1/2", "--s", "1", "--t", "0", "--v0", "0", "--v1", "2", "--v2", "1",
        "--n", "3", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[1] == "3,5/2"


def test_config_file(tmp_path, capsys):
    config = tmp_path / "family.cfg"
    config.write_text(
        "# a comment\n"
        "r = 1\n"
        "s = 1  # trailing comment\n"
        "t = 2\n"
        "v0 = 0\n"
        "v1 = 1\n"
        "v2 = 1\n"
    )
    code, out, _ = run_cli(capsys, "seq", "--config", str(config), "--n", "7", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "7,37"


def test_config_file_rational_value(tmp_path, capsys):
    config = tmp_path / "family.cfg"
    config.write_text("r = 1/2\ns = 1\nt = 0\nv0 = 0\nv1 = 2\nv2 = 1\n")
    code, out, _ = run_cli(capsys, "seq", "--config", str(config), "--n", "3", "--format", "text")
    assert code == 0
    assert out == "3: 5/2\n"


@pytest.mark.parametrize(
    "body, fragment",
    [
        ("r = 1.5\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 1\n", "integer or rational"),
        ("q = 1\nr = 1\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 1\n", "key"),
        ("r = 1\ns = 1\n", "missing keys"),
    ],
)
def test_config_file_errors(tmp_path, capsys, body, fragment):
    config = tmp_path / "family.cfg"
    config.write_text(body)
    code, out, err = run_cli(capsys, "seq", "--config", str(config), "--n", "0")
    assert code == 1
    assert fragment in err


def test_usage_errors(capsys):
    assert run_cli(capsys, "seq", "--n", "0")[0] == 1  # no parameter source
    assert run_cli(capsys, "seq", "--preset", "tribonacci", "--r", "1", "--n", "0")[0] == 1
    assert run_cli(capsys, "seq", "--preset", "nope", "--n", "0")[0] == 1
    assert run_cli(capsys, "seq", "--preset", "tribonacci", "--n", "5..2")[0] == 1
    assert run_cli(capsys, "seq", "--preset", "tribonacci", "--n", "x")[0] == 1
    assert run_cli(capsys, "nonsense")[0] == 1
    code, _, err = run_cli(capsys, "seq", "--preset", "tribonacci", "--n", "-3")
    assert code == 1 and err.strip()


def test_out_file(tmp_path, capsys):
    target = tmp_path / "seq.csv"
    code, out, _ = run_cli(
        capsys, "seq", "--preset", "tribonacci", "--n", "0..3", "--format", "csv", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[-1] == "3,2"


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--preset", "all", "--n-max", "5", "--m-max", "3")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"categories", "errata", "seed"}
    assert all(entry["failed"] == 0 for entry in report["categories"].values())


def test_verify_single_preset_text(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--preset", "narayana", "--n-max", "5", "--m-max", "3",
        "--report", "text",
    )
    assert code == 0
    assert "result: PASS" in out


def test_verify_repeat_runs_identical(capsys):
    args = ("verify", "--preset", "all", "--n-max", "6", "--m-max", "4", "--random-sets", "5", "--seed", "2")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_verify_bad_config(capsys):
    assert run_cli(capsys, "verify", "--n-max", "1")[0] == 1
    assert run_cli(capsys, "verify", "--preset", "nope")[0] == 1


def test_help_exits_zero(capsys):
    assert run_cli(capsys, "--help")[0] == 0
