"""Tests for the flg command-line interface."""
import io

import pytest

from scripts.cli import RunConfig, build_parser, main
from two_sided_flg.utils.config import config


def run(argv, capsys, monkeypatch, stdin=""):
    """Run one command and return (exit code, stdout, stderr)."""
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def generate(argv, capsys, monkeypatch, stdin=""):
    code, out, _ = run(["gen", *argv], capsys, monkeypatch, stdin)
    assert code == 0
    return out


def test_ten_client_loads(capsys, monkeypatch):
    instance = generate(["fixture", "--name", "ten-clients"], capsys, monkeypatch)
    code, out, _ = run(["loads"], capsys, monkeypatch, instance)
    assert code == 0
    assert out == "l 0 2/1\nl 1 5/2\nl 2 5/2\nl 3 3/1\n"


def test_no_facilities(capsys, monkeypatch):
    code, out, _ = run(["loads"], capsys, monkeypatch, "p flg 2 0 0\nv 0 1\nv 1 1\ns\n")
    assert code == 0
    assert out == ""


def test_placement_file(tmp_path, capsys, monkeypatch):
    instance = generate(["fixture", "--name", "three-clients"], capsys, monkeypatch)
    placement = tmp_path / "placement.txt"
    placement.write_text("s 1 1\n")
    code, out, _ = run(["loads", "--placement", str(placement)], capsys, monkeypatch, instance)
    assert code == 0
    assert out == "l 0 3/2\nl 1 3/2\n"


@pytest.mark.parametrize("stdin", [
    "p flg 2 0 1\nv 0 1\nv 1 1\n",
    "p flg 2 0\n",
    "p flg 2 1 1\nv 0 1\nv 1 1\ne 0 0\ns 0\n",
    "p flg 1 0 1\nv 0 -1\ns 0\n",
])
def test_bad_input_exits_2(stdin, capsys, monkeypatch):
    code, out, err = run(["loads"], capsys, monkeypatch, stdin)
    assert code == 2
    assert out == ""
    assert "Error" in err


def test_missing_input_file(tmp_path, capsys, monkeypatch):
    code, _, _ = run(["loads", "--input", str(tmp_path / "absent.txt")], capsys, monkeypatch)
    assert code == 2


def test_lower_bound_dynamics(capsys, monkeypatch):
    instance = generate(["lower-bound", "--k", "2", "--x", "4"], capsys, monkeypatch)
    assert instance.startswith("p flg 13 12 2\n")
    code, out, _ = run(["find-spe", "--seed", "3"], capsys, monkeypatch, instance)
    assert code == 0
    assert out.startswith(instance)
    tail = out[len(instance):].splitlines()
    assert tail[0] == "s 12 12"
    assert tail[1].startswith("# moves ")
    assert tail[2:] == ["# welfare 9", "# ratio 13/9"]


def test_lower_bound_optimum_is_not_stable(capsys, monkeypatch):
    instance = generate(["lower-bound", "--k", "2", "--x", "4"], capsys, monkeypatch)
    code, out, _ = run(["opt"], capsys, monkeypatch, instance)
    assert code == 0
    assert out == "s 0 12\nw 13\n"

    code, out, _ = run(["check-spe"], capsys, monkeypatch, instance + "s 0 12\n")
    assert code == 0
    assert out == "spe false\nx 0 12 9/2\n"

    code, out, _ = run(["best-response", "--facility", "0"], capsys, monkeypatch, instance + "s 0 12\n")
    assert out == "b 0 12 9/2\n"

    code, out, _ = run(["check-spe"], capsys, monkeypatch, instance + "s 12 12\n")
    assert out == "spe true\n"


def test_3sat_optimum_covers_everything(tmp_path, capsys, monkeypatch):
    cnf = tmp_path / "two_clauses.cnf"
    cnf.write_text("p cnf 3 2\n1 -2 3 0\n-1 2 3 0\n")
    instance = generate(["3sat", "--cnf", str(cnf)], capsys, monkeypatch)
    assert instance.startswith("p flg 8 12 3\n")
    code, out, _ = run(["opt"], capsys, monkeypatch, instance)
    assert code == 0
    assert out.splitlines()[-1] == "w 8"

    code, out, _ = run(["opt", "--greedy"], capsys, monkeypatch, instance)
    assert code == 0
    assert out.splitlines()[-1].startswith("w ")


def test_3sat_from_stdin(capsys, monkeypatch):
    formula = generate(["random-3cnf", "--vars", "4", "--clauses", "5", "--seed", "1"], capsys, monkeypatch)
    assert formula.startswith("p cnf 4 5\n")
    instance = generate(["3sat"], capsys, monkeypatch, formula)
    assert instance.startswith("p flg 13 ")


def test_budget_exit_code(capsys, monkeypatch):
    instance = generate(["fixture", "--name", "ten-clients"], capsys, monkeypatch)
    code, out, err = run(["opt", "--budget", "10"], capsys, monkeypatch, instance)
    assert code == 3
    assert out == ""
    assert "budget" in err


def test_find_spe_falls_back_to_greedy(capsys, monkeypatch):
    instance = generate(["fixture", "--name", "ten-clients"], capsys, monkeypatch)
    code, out, _ = run(["find-spe", "--budget", "10", "--no-echo"], capsys, monkeypatch, instance)
    assert code == 0
    assert out.startswith("s ")
    lines = out.splitlines()
    assert lines[-2] == "# optimum greedy"
    assert lines[-1].startswith("# ratio ")


def test_client_equilibrium_round_trip(tmp_path, capsys, monkeypatch):
    instance = generate(["fixture", "--name", "ten-clients"], capsys, monkeypatch)
    code, out, _ = run(["client-eq"], capsys, monkeypatch, instance)
    assert code == 0
    assert all(line.startswith("d ") for line in out.splitlines())

    distribution = tmp_path / "sigma.txt"
    distribution.write_text(out)
    code, out, _ = run(["check-client-eq", "--distribution", str(distribution)], capsys, monkeypatch, instance)
    assert code == 0
    assert out == "client-equilibrium true\n"

    distribution.write_text("d 0 0 1/1\n")
    code, out, _ = run(["check-client-eq", "--distribution", str(distribution)], capsys, monkeypatch, instance)
    assert code == 2


def test_poa_report(capsys, monkeypatch):
    instance = generate(["lower-bound", "--k", "2", "--x", "4"], capsys, monkeypatch)
    code, out, _ = run(["poa", "--seeds", "0", "1"], capsys, monkeypatch, instance)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "opt 0 12 welfare 13 exact"
    assert "spe 12 12 welfare 9" in lines
    assert "poa 13/9" in lines
    assert "pos 13/9" in lines


def test_export_dot(capsys, monkeypatch):
    instance = generate(["fixture", "--name", "three-clients"], capsys, monkeypatch)
    code, out, _ = run(["export-dot"], capsys, monkeypatch, instance)
    assert code == 0
    assert out.startswith("digraph host {")
    assert "shape=box" in out

    code, out, _ = run(["export-dot", "--network"], capsys, monkeypatch, instance)
    assert code == 0
    assert out.startswith("digraph flow {")


def test_trace_csv(capsys, monkeypatch):
    instance = generate(["lower-bound", "--k", "2", "--x", "4"], capsys, monkeypatch)
    code, out, _ = run(["find-spe", "--format", "csv"], capsys, monkeypatch, instance + "s 0 1\n")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "move,mover,old_location,new_location,old_load,new_load,potential_before,potential_after"
    assert len(lines) >= 2


def test_runs_are_deterministic(capsys, monkeypatch):
    instance = generate(
        ["random", "--n", "12", "--density", "0.3", "--max-weight", "3", "--k", "3", "--seed", "5"],
        capsys, monkeypatch,
    )
    assert instance == generate(
        ["random", "--n", "12", "--density", "0.3", "--max-weight", "3", "--k", "3", "--seed", "5"],
        capsys, monkeypatch,
    )
    first = run(["find-spe", "--seed", "2"], capsys, monkeypatch, instance)
    second = run(["find-spe", "--seed", "2"], capsys, monkeypatch, instance)
    assert first[:2] == second[:2]
    assert first[0] == 0


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_demo_walkthrough(capsys):
    from scripts.demo import demo_walkthrough

    demo_walkthrough()
    out = capsys.readouterr().out
    assert "l 1 5/2" in out
    assert "client-equilibrium true" in out
    assert "poa 13/9" in out
    assert "w 8" in out


def test_malformed_placement_file(tmp_path, capsys, monkeypatch):
    instance = generate(["fixture", "--name", "three-clients"], capsys, monkeypatch)
    placement = tmp_path / "placement.txt"
    for text in ("s 0\n", "s 0 7\n", "t 0 1\n"):
        placement.write_text(text)
        code, out, _ = run(["loads", "--placement", str(placement)], capsys, monkeypatch, instance)
        assert code == 2
        assert out == ""


@pytest.mark.parametrize("family", [
    ["lower-bound", "--k", "2", "--x", "4"],
    ["random", "--n", "9", "--density", "0.3", "--max-weight", "4", "--k", "3", "--seed", "1"],
    ["fixture", "--name", "ten-clients"],
    ["fixture", "--name", "three-clients"],
    ["fixture", "--name", "two-clauses"],
    ["fixture", "--name", "basic-us"],
])
def test_piped_composition(family, capsys, monkeypatch):
    instance = generate(family, capsys, monkeypatch)
    code, stable, _ = run(["find-spe"], capsys, monkeypatch, instance)
    assert code == 0
    code, out, _ = run(["check-spe"], capsys, monkeypatch, stable)
    assert code == 0
    assert out == "spe true\n"


def test_run_config_defaults_follow_settings():
    settings = RunConfig(command="find-spe")
    assert settings.move_cap == config.dynamics.move_cap
    assert settings.budget == config.dynamics.enumeration_budget

    args = build_parser().parse_args(["find-spe", "--seed", "4"])
    settings = RunConfig.from_args(args)
    assert settings.seeds == (4,)
    assert settings.move_cap == config.dynamics.move_cap
    assert settings.budget == config.dynamics.enumeration_budget
