"""End-to-end CLI behavior: flags, config files, outputs, exit codes."""

import json

import numpy as np
import pytest

from stapy.cli import main, parse_config


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------- parse_config


def test_parse_config_rastrigin_defaults():
    config = parse_config(["--function", "rastrigin", "--dim", "10"])
    assert config.function == "rastrigin"
    assert config.dim == 10
    assert config.bounds == ((-5.12, 5.12),) * 10
    assert config.params.iterations == 1000 and config.params.se == 30
    assert config.seeds == (0,), "default seed is 0, explicit"


def test_parse_config_bounds_flag_overrides_default_box():
    config = parse_config(
        ["--function", "griewank", "--dim", "15", "--bounds", "-600,600"]
    )
    assert config.bounds == ((-600.0, 600.0),) * 15


def test_parse_config_fixed_dim_autofilled():
    config = parse_config(["--function", "paper_quadratic"])
    assert config.dim == 3
    assert config.bounds == ((-3.0, 3.0), (-2.0, 2.0), (-1.0, 1.0))


def test_parse_config_param_flags():
    config = parse_config(
        [
            "--function", "sphere", "--dim", "2", "--iterations", "7",
            "--se", "12", "--alpha-max", "2", "--alpha-min", "1e-3",
            "--beta", "0.5", "--gamma", "1.5", "--delta", "2.5", "--fc", "4",
            "--seed", "3", "--seed", "5", "--target-fitness", "1e-9",
        ]
    )
    p = config.params
    assert (p.iterations, p.se, p.alpha_max, p.alpha_min) == (7, 12, 2.0, 1e-3)
    assert (p.beta, p.gamma, p.delta, p.fc) == (0.5, 1.5, 2.5, 4.0)
    assert config.seeds == (3, 5)
    assert config.target_fitness == 1e-9


def test_parse_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(
        json.dumps(
            {
                "function": "sphere",
                "dim": 4,
                "bounds": [-10, 10],
                "iterations": 50,
                "se": 10,
                "seeds": [7],
            }
        )
    )
    config = parse_config(["--config", str(cfg)])
    assert (config.function, config.dim, config.params.se) == ("sphere", 4, 10)
    assert config.bounds == ((-10.0, 10.0),) * 4
    assert config.seeds == (7,)
    # CLI flags win over the file.
    override = parse_config(["--config", str(cfg), "--se", "25", "--dim", "3"])
    assert override.params.se == 25 and override.dim == 3


def test_parse_config_bounds_file(tmp_path):
    path = tmp_path / "box.txt"
    path.write_text("# per-coordinate box\n-3,3\n-2 2\n\n-1,1\n")
    config = parse_config(
        ["--function", "paper_quadratic", "--dim", "3", "--bounds-file", str(path)]
    )
    assert config.bounds == ((-3.0, 3.0), (-2.0, 2.0), (-1.0, 1.0))


def test_parse_config_expression_function():
    config = parse_config(
        ["--function", "x1^2+x2^2", "--dim", "2", "--bounds", "-1,1"]
    )
    assert config.function == "x1^2+x2^2"


@pytest.mark.parametrize(
    "args,needle",
    [
        (["--dim", "2"], "--function is required"),
        (["--function", "sphere"], "--dim is required"),
        (["--function", "nope", "--dim", "2", "--bounds", "-1,1"], "unknown function"),
        (["--function", "sphere", "--dim", "0"], "positive integer"),
        (["--function", "sphere", "--dim", "2", "--bounds", "1,1"], "malformed bounds"),
        (["--function", "sphere", "--dim", "2", "--bounds", "1"], "malformed bounds"),
        (["--function", "paper_quadratic", "--dim", "5"], "dim mismatch"),
        (["--function", "x1+x9", "--dim", "2", "--bounds", "-1,1"], "unknown function"),
        (["--function", "x1+x2", "--dim", "2"], "--bounds or --bounds-file"),
        (["--function", "sphere", "--dim", "2", "--se", "0"], "se"),
        (["--function", "sphere", "--dim", "2", "--seed", "-1"], "seed"),
    ],
)
def test_parse_config_actionable_errors(args, needle):
    from stapy.cli import CliError

    with pytest.raises(CliError, match=needle):
        parse_config(args)


def test_parse_config_mutually_exclusive_bounds(tmp_path):
    from stapy.cli import CliError

    path = tmp_path / "box.txt"
    path.write_text("-1,1\n-1,1\n")
    with pytest.raises(CliError, match="mutually exclusive"):
        parse_config(
            ["--function", "sphere", "--dim", "2", "--bounds", "-1,1",
             "--bounds-file", str(path)]
        )


def test_parse_config_bounds_file_dim_mismatch(tmp_path):
    from stapy.cli import CliError

    path = tmp_path / "box.txt"
    path.write_text("-1,1\n")
    with pytest.raises(CliError, match="dim mismatch"):
        parse_config(
            ["--function", "sphere", "--dim", "2", "--bounds-file", str(path)]
        )


def test_parse_config_rejects_unknown_config_key(tmp_path):
    from stapy.cli import CliError

    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"function": "sphere", "dim": 2, "speed": 11}))
    with pytest.raises(CliError, match="unknown config key 'speed'"):
        parse_config(["--config", str(cfg)])


# ------------------------------------------------------------------- main


def test_main_error_exit_code_and_message(capsys):
    code, out, err = run_cli(["--function", "nope", "--dim", "2"], capsys)
    assert code == 2
    assert err.startswith("error: ")
    assert err.count("\n") == 1, "one-line message"


def test_main_prints_summary_and_echoes_seed(capsys):
    code, out, _ = run_cli(
        ["--function", "sphere", "--dim", "2", "--iterations", "5"], capsys
    )
    assert code == 0
    assert "seed 0:" in out
    assert "fbest=" in out and "best = [" in out and "ms" in out


def test_main_rastrigin_csv_1000_rows_non_increasing(tmp_path, capsys):
    csv_path = tmp_path / "hist.csv"
    code, _, _ = run_cli(
        ["--function", "rastrigin", "--dim", "10", "--bounds", "-5.12,5.12",
         "--iterations", "1000", "--out-csv", str(csv_path)],
        capsys,
    )
    assert code == 0
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "seed,iteration,fbest"
    assert len(lines) == 1 + 1000
    rows = [line.split(",") for line in lines[1:]]
    assert [int(r[1]) for r in rows] == list(range(1, 1001))
    fbest = [float(r[2]) for r in rows]
    assert all(b <= a for a, b in zip(fbest, fbest[1:])), "fbest must not increase"
    assert all(r[0] == "0" for r in rows)


def test_main_json_byte_identical_except_runtime(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        code, _, _ = run_cli(
            ["--function", "rastrigin", "--dim", "4", "--iterations", "40",
             "--seed", "42", "--out-json", str(path)],
            capsys,
        )
        assert code == 0
    texts = [p.read_text(encoding="utf-8") for p in paths]
    stripped = [
        "\n".join(l for l in t.splitlines() if "runtime_ms" not in l) for t in texts
    ]
    assert stripped[0] == stripped[1]
    assert texts[0].endswith("\n")


def test_main_json_schema_and_feasibility(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, _, _ = run_cli(
        ["--function", "griewank", "--dim", "3", "--iterations", "30",
         "--seed", "1", "--seed", "2", "--out-json", str(path)],
        capsys,
    )
    assert code == 0
    records = json.loads(path.read_text(encoding="utf-8"))
    assert [r["seed"] for r in records] == [1, 2], "seed order preserved"
    for record in records:
        assert set(record) == {
            "seed", "best", "fbest", "evaluations", "runtime_ms", "params",
        }
        for value, (lo, hi) in zip(record["best"], record["params"]["bounds"]):
            assert lo <= value <= hi, "JSON best must lie inside the bounds"
        assert record["params"]["function"] == "griewank"
        assert record["params"]["se"] == 30


def test_main_config_round_trip_replay(tmp_path, capsys):
    """The params object in the JSON summary reproduces the identical run."""
    first = tmp_path / "first.json"
    code, _, _ = run_cli(
        ["--function", "rastrigin", "--dim", "5", "--iterations", "60",
         "--seed", "9", "--out-json", str(first)],
        capsys,
    )
    assert code == 0
    record = json.loads(first.read_text(encoding="utf-8"))[0]
    replay_cfg = tmp_path / "replay.json"
    replay_cfg.write_text(json.dumps(record["params"]))
    second = tmp_path / "second.json"
    code, _, _ = run_cli(
        ["--config", str(replay_cfg), "--seed", "9", "--out-json", str(second)],
        capsys,
    )
    assert code == 0
    replayed = json.loads(second.read_text(encoding="utf-8"))[0]
    assert replayed["best"] == record["best"]
    assert replayed["fbest"] == record["fbest"]
    assert replayed["evaluations"] == record["evaluations"]


def test_main_expression_objective_runs(tmp_path, capsys):
    path = tmp_path / "expr.json"
    code, out, _ = run_cli(
        ["--function", "(x1-1)^2+(x2-2*x1)^2+(x3-3*x2)^2", "--dim", "3",
         "--bounds-file", str(write_box(tmp_path)), "--iterations", "100",
         "--seed", "3", "--out-json", str(path)],
        capsys,
    )
    assert code == 0
    record = json.loads(path.read_text(encoding="utf-8"))[0]
    assert abs(record["fbest"] - 1150.0 / 2116.0) < 1e-3


def write_box(tmp_path):
    path = tmp_path / "box.txt"
    path.write_text("-3,3\n-2,2\n-1,1\n")
    return path


def test_main_target_fitness_short_run(tmp_path, capsys):
    csv_path = tmp_path / "short.csv"
    code, _, _ = run_cli(
        ["--function", "sphere", "--dim", "3", "--iterations", "1000",
         "--target-fitness", "1e-6", "--out-csv", str(csv_path)],
        capsys,
    )
    assert code == 0
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert 1 < len(lines) < 1001
    assert float(lines[-1].split(",")[2]) <= 1e-6


def test_main_unwritable_output_exits_1(tmp_path, capsys):
    code, _, err = run_cli(
        ["--function", "sphere", "--dim", "2", "--iterations", "2",
         "--out-json", str(tmp_path / "missing-dir" / "x.json")],
        capsys,
    )
    assert code == 1
    assert "error: cannot write" in err


def test_main_csv_uses_lf_and_full_precision(tmp_path, capsys):
    csv_path = tmp_path / "prec.csv"
    code, _, _ = run_cli(
        ["--function", "sphere", "--dim", "2", "--iterations", "10",
         "--seed", "8", "--out-csv", str(csv_path)],
        capsys,
    )
    assert code == 0
    raw = csv_path.read_bytes()
    assert b"\r" not in raw, "LF line endings only"
    text = raw.decode("utf-8")
    values = [float(line.split(",")[2]) for line in text.splitlines()[1:]]
    from stapy import SearchSpace, StaParams, sphere, sta_run

    result = sta_run(sphere, SearchSpace.uniform(2, -100, 100),
                     StaParams(iterations=10), rng=8)
    assert values == list(result.history), "repr round-trip must be lossless"
