import json

import numpy as np
import pytest

from aristotle_orbits import cli


def run(argv):
    return cli.main(argv)


# ------------------------------------------------------------------ verify

def test_verify_single_model_passes(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["verify", "--model", "central1", "--seed", "3",
                "--out", str(out)])
    assert code == 0
    text = capsys.readouterr().out
    assert "RESULT: PASS" in text
    doc = json.loads(out.read_text())
    assert doc["passed"] is True
    assert doc["seed"] == 3
    names = [c["name"] for c in doc["checks"]]
    assert "central1: jacobi identity" in names
    assert "central1: casimir invariance" in names


def test_verify_all_models_report_has_convention_notes(tmp_path):
    out = tmp_path / "report.json"
    assert run(["verify", "--seed", "1", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    notes = doc["convention_notes"]
    assert len(notes) >= 8
    models_noted = {n["model"] for n in notes}
    assert {"central1", "central2", "noncentral", "double"} <= models_noted
    assert all(n["oracle_agrees_with_implementation"] for n in notes)
    assert all(np.isfinite(n["difference_at_probe"]) for n in notes)


def test_verify_corrupted_structure_fails_with_exit_one(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "corrupt": {"model": "base", "a": "P1", "b": "P2", "out": "P1",
                    "delta": 1.0}
    }))
    code = run(["verify", "--model", "base", "--config", str(cfg)])
    assert code == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_empty_model_list_is_usage_error(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"models": []}))
    assert run(["verify", "--config", str(cfg)]) == 2


def test_verify_deterministic_output(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["verify", "--model", "double", "--seed", "7",
                "--out", str(a)]) == 0
    assert run(["verify", "--model", "double", "--seed", "7",
                "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


# ------------------------------------------------------------------- orbit

def test_orbit_central1_documented_values(capsys):
    code = run(["orbit", "--model", "central1",
                "--xi", "0,1,0,0,1"])
    assert code == 0
    text = capsys.readouterr().out
    assert "s = 0.5" in text
    assert "[0.0, 1.0],\n [-1.0, 0.0]" in text


def test_orbit_double_rest_point(capsys):
    code = run(["orbit", "--model", "double",
                "--xi", "0.25,0,0,1.5,0,0,1,1"])
    assert code == 0
    text = capsys.readouterr().out
    assert "s = 0.25" in text
    assert "U = 1.5" in text


def test_orbit_degenerate_force_is_reported(capsys):
    code = run(["orbit", "--model", "noncentral",
                "--xi", "0,1,0,0,0,0,1"])
    assert code == 2
    assert "threshold" in capsys.readouterr().err


def test_orbit_wrong_arity_is_usage_error(capsys):
    assert run(["orbit", "--model", "central1", "--xi", "1,2,3"]) == 2


def test_orbit_base_model_has_no_chart():
    assert run(["orbit", "--model", "base", "--xi", "0,0,0,0"]) == 2


# ---------------------------------------------------------------- simulate

def test_simulate_double_group_flow_csv(tmp_path, capsys):
    out = tmp_path / "traj.csv"
    code = run(["simulate", "--model", "double", "--flow", "group",
                "--dt", "0.003", "--steps", "1000", "--out", str(out),
                "--point", "0,0,1,0"])
    assert code == 0
    header, data = cli.read_trajectory_csv(str(out))
    assert header == ["t", "p1", "p2", "q1", "q2", "h", "k", "s", "U"]
    assert data.shape == (1001, 9)
    final = data[-1]
    assert final[0] == pytest.approx(3.0)
    assert final[1] == pytest.approx(-3.0, abs=1e-12)   # p1 = -k q1 t
    assert final[3] == pytest.approx(1.0)               # q1 frozen


def test_simulate_central2_group_flow_final_action(tmp_path):
    out = tmp_path / "traj.csv"
    code = run(["simulate", "--model", "central2", "--flow", "group",
                "--dt", "0.002", "--steps", "1000", "--out", str(out),
                "--point", "0,0,0,0"])
    assert code == 0
    header, data = cli.read_trajectory_csv(str(out))
    i_l = header.index("l")
    assert data[-1][i_l] == pytest.approx(2.0, abs=1e-12)


def test_simulate_csv_round_trips_bit_exactly(tmp_path):
    out = tmp_path / "traj.csv"
    run(["simulate", "--model", "double", "--flow", "hamiltonian",
         "--hamiltonian", "kinetic", "--integrator", "rk4",
         "--dt", "0.01", "--steps", "100", "--out", str(out),
         "--point", "1,0,0,0"])
    header, data = cli.read_trajectory_csv(str(out))
    out2 = tmp_path / "traj2.csv"
    with open(out2, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in data:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")
    assert out.read_bytes() == out2.read_bytes()


def test_simulate_json_document_carries_drift(tmp_path):
    out = tmp_path / "traj.json"
    code = run(["simulate", "--model", "double", "--flow", "hamiltonian",
                "--hamiltonian", "kinetic", "--dt", "0.01", "--steps", "200",
                "--format", "json", "--out", str(out), "--point", "1,0,0,0"])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["columns"][0] == "t"
    assert len(doc["rows"]) == 201
    assert doc["drift"]["H"] < 1e-9
    assert doc["drift"]["s"] < 1e-12


def test_simulate_zero_steps_is_usage_error(tmp_path):
    out = tmp_path / "traj.csv"
    assert run(["simulate", "--model", "double", "--flow", "group",
                "--dt", "0.1", "--steps", "0", "--out", str(out),
                "--point", "0,0,1,0"]) == 2


def test_simulate_without_initial_state_is_usage_error(tmp_path):
    out = tmp_path / "traj.csv"
    assert run(["simulate", "--model", "double", "--flow", "group",
                "--dt", "0.1", "--steps", "10", "--out", str(out)]) == 2


def test_simulate_label_override(tmp_path):
    out = tmp_path / "traj.csv"
    code = run(["simulate", "--model", "double", "--flow", "group",
                "--dt", "0.1", "--steps", "10", "--out", str(out),
                "--point", "0,0,1,0", "--label", "k=2.0"])
    assert code == 0
    header, data = cli.read_trajectory_csv(str(out))
    assert data[-1][header.index("p1")] == pytest.approx(-2.0, abs=1e-12)


# ----------------------------------------------------------------- bracket

def test_bracket_command_double_magnetic_pair(capsys):
    code = run(["bracket", "--model", "double", "--at", "0.3,0.1,-0.2,0.5",
                "--f", "p1", "--g", "p2"])
    assert code == 0
    assert "{p1, p2} = -1.0" in capsys.readouterr().out


def test_bracket_command_noncentral_pair(capsys):
    code = run(["bracket", "--model", "noncentral", "--at", "0.2,0.4,0.6,0.9",
                "--f", "j", "--g", "q"])
    assert code == 0
    assert "{j, q} = -0.6" in capsys.readouterr().out


def test_simulate_fully_driven_by_config_document(tmp_path):
    out = tmp_path / "traj.csv"
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({
        "model": "double",
        "flow": "group",
        "dt": 0.003,
        "steps": 1000,
        "point": [0, 0, 1, 0],
        "out": str(out),
    }))
    assert run(["simulate", "--config", str(cfg)]) == 0
    header, data = cli.read_trajectory_csv(str(out))
    assert data[-1][header.index("p1")] == pytest.approx(-3.0, abs=1e-12)


def test_simulate_flag_overrides_config(tmp_path):
    out_cfg = tmp_path / "a.csv"
    out_flag = tmp_path / "b.csv"
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({
        "model": "double", "flow": "group", "dt": 0.1, "steps": 10,
        "point": "0,0,1,0", "out": str(out_cfg),
    }))
    assert run(["simulate", "--config", str(cfg), "--out", str(out_flag)]) == 0
    assert out_flag.exists() and not out_cfg.exists()


def test_simulate_unknown_config_key_is_usage_error(tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"model": "double", "bogus": 1}))
    assert run(["simulate", "--config", str(cfg)]) == 2


def test_simulate_divergent_solver_is_numeric_failure(tmp_path, capsys):
    # dt far above the fixed-point contraction bound: exit code 3
    out = tmp_path / "traj.csv"
    code = run(["simulate", "--model", "double", "--flow", "hamiltonian",
                "--hamiltonian", "kinetic", "--dt", "3.0", "--steps", "5",
                "--out", str(out), "--point", "1,0,0,0"])
    assert code == 3
    assert "numeric failure" in capsys.readouterr().err


def test_bracket_unknown_coordinate_is_usage_error():
    assert run(["bracket", "--model", "double", "--at", "0,0,0,0",
                "--f", "p1", "--g", "zz"]) == 2


def test_unknown_command_is_usage_error():
    assert run(["frobnicate"]) == 2
