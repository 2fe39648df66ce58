import json

import pytest

from polysieve import cli
from polysieve.cli import RunConfig, UsageError, main, parse_config, render, run


def run_json(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_parse_config_echoes_inputs():
    cfg = parse_config(
        ["sieve", "--poly", "1,0,0", "--Q", "20", "--M", "0", "--N", "50",
         "--weights", "ones", "--output", "json"]
    )
    assert cfg == RunConfig(
        subcommand="sieve",
        poly=(1, 0, 0),
        order=20,
        start=0,
        length=50,
        weights="ones",
        output="json",
    )


def test_parse_config_rho():
    cfg = parse_config(["rho", "--poly", "1,0,1", "--Q", "100"])
    assert cfg.subcommand == "rho"
    assert cfg.poly == (1, 0, 1)
    assert cfg.order == 100


def test_usage_errors():
    with pytest.raises(UsageError):
        parse_config(["rho", "--poly", "0,1", "--Q", "5"])
    with pytest.raises(UsageError):
        parse_config(["sieve", "--poly", "1,0", "--Q", "5", "--N", "0"])
    with pytest.raises(UsageError):
        parse_config(["rho", "--poly", "1,x", "--Q", "5"])
    with pytest.raises(UsageError):
        parse_config(["sharpness", "--n", "2", "--q", "6"])
    with pytest.raises(UsageError):
        parse_config(["sharpness", "--n", "2", "--q", "5", "--Q", "5"])
    with pytest.raises(SystemExit) as exc:
        parse_config(["sieve", "--poly", "1,0"])  # missing required flags
    assert exc.value.code == 2


def test_usage_error_exit_code(capsys):
    assert main(["rho", "--poly", "0,1", "--Q", "5"]) == 2
    assert "leading" in capsys.readouterr().err


def test_report_schema(capsys):
    code, report = run_json(["rho", "--poly", "1,0,1", "--Q", "30"], capsys)
    assert code == 0
    assert set(report) == {"subcommand", "inputs", "results", "checks", "wall_ms"}
    for chk in report["checks"]:
        assert set(chk) == {"name", "paper_ref", "ok"}
        assert chk["ok"] is True
    assert report["results"]["rho"][0] == 1
    assert len(report["results"]["rho"]) == 30


def test_prop1_result_keys(capsys):
    code, report = run_json(["prop1", "--poly", "1,0,1", "--Q", "50"], capsys)
    assert code == 0
    assert {"sum", "euler_majorant", "envelope_exponent"} <= set(report["results"])
    assert report["results"]["envelope_exponent"] == 6  # omega(1) + theta(2)


def test_sharpness_example(capsys):
    code, report = run_json(["sharpness", "--n", "2", "--q", "5"], capsys)
    assert code == 0
    res = report["results"]
    assert res["ex1_lhs"] == 20 and res["ex1_rhs"] == 20 and res["ok"] is True


def test_sharpness_general_form(capsys):
    code, report = run_json(["sharpness", "--n", "3", "--q", "5"], capsys)
    assert code == 0
    res = report["results"]
    assert res["general_lhs"] == 0 and res["general_rhs"] == 0 and res["ok"] is True


def test_sharpness_with_floor_demo(capsys):
    code, report = run_json(
        ["sharpness", "--n", "2", "--q", "5", "--Q", "5", "--N", "65"], capsys
    )
    assert code == 0
    res = report["results"]
    assert res["demo_ok"] is True
    assert res["demo_lhs"] >= res["demo_floor"]


def test_kernel_subcommand(capsys):
    code, report = run_json(["kernel", "--c", "6", "--Q", "4"], capsys)
    assert code == 0
    assert report["results"]["kernel_exact"] == 2
    assert report["results"]["gcd_sum_bound"] == 8


def test_corollary_subcommand(capsys):
    code, report = run_json(
        ["corollary", "--poly", "1,0", "--D", "5", "--M", "0", "--N", "5"], capsys
    )
    assert code == 0
    res = report["results"]
    assert abs(res["lhs"] - res["lhs_divisor_form"]) <= 1e-8 * max(1.0, res["lhs"])


def test_budget_exit_code(capsys):
    code = main(["sieve", "--poly", "1,0", "--Q", "300", "--N", "200", "--budget", "100"])
    assert code == 3
    assert "budget" in capsys.readouterr().err


def test_failed_check_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli.suite_mod, "RATIO_CEILING", 0.0)
    code, report = run_json(["sieve", "--poly", "1,0", "--Q", "5", "--N", "5"], capsys)
    assert code == 1
    assert any(not chk["ok"] for chk in report["checks"])


def test_output_deterministic_for_fixed_config(capsys):
    argv = ["sieve", "--poly", "2,0,-1", "--Q", "8", "--M", "-3", "--N", "12",
            "--weights", "random", "--seed", "9"]
    _, first = run_json(argv, capsys)
    _, second = run_json(argv, capsys)
    # wall clock is the single nondeterministic field
    first.pop("wall_ms")
    second.pop("wall_ms")
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_render_rejects_non_finite():
    report = {
        "subcommand": "x", "inputs": {}, "results": {"bad": float("inf")},
        "checks": [], "wall_ms": 0.0,
    }
    with pytest.raises(ValueError):
        render(report, "json")
    with pytest.raises(ValueError):
        cli._assert_finite(report)


def test_csv_output(capsys):
    code = main(["kernel", "--c", "0", "--Q", "3", "--output", "csv"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "section,key,value"
    assert any(line.startswith("check:gcd-majorant,ok,True") for line in lines)


def test_weight_file_round_trip(tmp_path, capsys):
    path = tmp_path / "w.csv"
    path.write_text("1,2\n3,-1\n")
    code, report = run_json(
        ["sieve", "--poly", "1,0", "--Q", "4", "--M", "0", "--N", "3",
         "--weights", str(path)], capsys
    )
    assert code == 0
    assert report["results"]["norm_sq"] == 5.0
    assert report["results"]["lhs_exact"] is not None  # integer weights detected


def test_weight_file_outside_interval(tmp_path, capsys):
    path = tmp_path / "w.csv"
    path.write_text("99,1\n")
    code = main(
        ["sieve", "--poly", "1,0", "--Q", "4", "--M", "0", "--N", "3",
         "--weights", str(path)]
    )
    assert code == 2
    assert "outside" in capsys.readouterr().err


def test_thread_env_var_validated(monkeypatch):
    monkeypatch.setenv("POLYSIEVE_THREADS", "2")
    parse_config(["kernel", "--c", "1", "--Q", "2"])
    monkeypatch.setenv("POLYSIEVE_THREADS", "zero")
    with pytest.raises(UsageError):
        parse_config(["kernel", "--c", "1", "--Q", "2"])


def test_run_function_direct():
    code, report = run(parse_config(["kernel", "--c", "1", "--Q", "2"]))
    assert code == 0
    assert report["results"]["kernel_exact"] == 0
