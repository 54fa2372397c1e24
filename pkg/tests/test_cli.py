"""Exit codes and output formats of the command-line entry point."""

import json

import pytest

from snakescroll.cli import EXIT_INPUT, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_orbit_text(capsys):
    code, out, _ = run(
        capsys, "orbit", "--n", "11", "--seed", "00001010000", "--format", "text"
    )
    assert code == EXIT_OK
    assert "sigma" in out and "42" in out
    assert "snakes:" in out  # colored table blocks follow the report


def test_orbit_json(capsys):
    code, out, _ = run(
        capsys, "orbit", "--n", "11", "--seed", "00001010000", "--format", "json"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["orbitLength"] == 7
    assert payload["p"] == 14 and payload["q"] == 21
    assert payload["invariantFactors"] == [22]
    assert payload["coSwallowCycles"] == [3, 3]
    assert all(payload["agreement"].values())


def test_orbit_csv(capsys):
    code, out, _ = run(
        capsys, "orbit", "--n", "11", "--seed", "00001010000", "--format", "csv"
    )
    assert code == EXIT_OK
    assert out.startswith("key,value")
    assert "sigma,42" in out


def test_orbit_svg(capsys):
    code, out, _ = run(
        capsys, "orbit", "--n", "11", "--seed", "00001010000", "--format", "svg"
    )
    assert code == EXIT_OK
    assert out.startswith("<svg") and "</svg>" in out
    assert "circle" in out


def test_orbit_rejects_bad_seed(capsys):
    code, _, err = run(capsys, "orbit", "--n", "4", "--seed", "1100")
    assert code == EXIT_INPUT
    assert "independent" in err
    code, _, err = run(capsys, "orbit", "--n", "5", "--seed", "1100")
    assert code == EXIT_INPUT


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--n", "13")
    assert code == EXIT_OK
    assert "7 feasible quadruples" in out
    assert "17 ticker tapes" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--n", "13", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["tapeCount"] == 17
    assert len(payload["tapes"]) == 17


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--n", "13", "--format", "csv")
    assert code == EXIT_OK
    assert out.count("\n") == 18  # header + 17 rows


def test_verify_subcommand(capsys):
    code, out, _ = run(
        capsys, "verify", "--n-min", "2", "--n-max", "6", "--omega-max", "2"
    )
    assert code == EXIT_OK
    assert "all checks passed" in out


def test_sum_period_subcommand(capsys):
    code, out, _ = run(capsys, "sum-period", "--lambda", "3", "--k", "4")
    assert code == EXIT_OK
    assert "n: 12" in out
    code, out, _ = run(
        capsys, "sum-period", "--lambda", "7", "--k", "4", "--format", "json"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["achievedPeriod"] == 7
    assert payload["sumVector"][:7] == [9, 8, 8, 8, 8, 8, 7]


def test_sum_period_rejects_even_lambda(capsys):
    code, _, err = run(capsys, "sum-period", "--lambda", "2", "--k", "4")
    assert code == EXIT_INPUT
    assert "input error" in err


def test_construct_subcommand(capsys):
    code, out, _ = run(
        capsys, "construct", "--slither", "EDEDED", "--coslither", "SS", "--n", "11"
    )
    assert code == EXIT_OK
    assert out.splitlines()[0].count("1") == 4

    code, out, _ = run(
        capsys,
        "construct", "--slither", "ED", "--coslither", "L", "--n", "5",
        "--format", "json",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["roundTrip"]["matches"] is True


def test_construct_rejects_infeasible_pair(capsys):
    code, _, err = run(
        capsys, "construct", "--slither", "EDEDED", "--coslither", "SSS", "--n", "11"
    )
    assert code == EXIT_INPUT


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit):
        main([])
