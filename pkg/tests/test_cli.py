import json

import pytest

from chooselab.cli import main
from chooselab.plane import cube_graph, cycle_graph


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.json"
    p.write_text(cycle_graph(5).to_json())
    return str(p)


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.json"
    p.write_text(cycle_graph(4).to_json())
    return str(p)


def test_verify_claims_single(capsys):
    rc = main(["verify-claims", "--claim", "star"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "[PASS] star" in out
    assert "literal scheme fails" in out


def test_verify_claims_unknown(capsys):
    assert main(["verify-claims", "--claim", "nope"]) == 2


def test_verify_claims_json_schema(capsys):
    rc = main(["verify-claims", "--claim", "k2-no-3nbr", "--report", "json"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["schema"] == 1
    assert data["passed"] is True


def test_verify_claims_all_reports_discrepancy(capsys):
    rc = main(["verify-claims", "--report", "json"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert data["failed"] == ["cycle-63-434"]


def test_check_choosability_no_with_witness(capsys, c5_file):
    rc = main(["check-choosability", "--graph", c5_file, "--f", "2",
               "--g", "1", "--report", "json"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert data["choosable"] is False
    assert all(cols == [1, 2] for cols in data["witness"].values())


def test_check_choosability_yes(capsys, c4_file):
    rc = main(["check-choosability", "--graph", c4_file, "--f", "2",
               "--g", "1"])
    assert rc == 0


def test_check_colorable(capsys, c5_file):
    assert main(["check-choosability", "--graph", c5_file, "--a", "5",
                 "--b", "2", "--colorable"]) == 0
    assert main(["check-choosability", "--graph", c5_file, "--a", "4",
                 "--b", "2", "--colorable"]) == 1


def test_check_choosability_bad_input(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert main(["check-choosability", "--graph", str(p), "--f", "2",
                 "--g", "1"]) == 2


def test_discharge_cube(capsys, tmp_path):
    p = tmp_path / "cube.json"
    p.write_text(cube_graph().to_json())
    rc = main(["discharge", "--graph", str(p), "--report", "json"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["total_final"] == "-20"
    assert data["conserved"] is True


def test_discharge_not_embedded(tmp_path, capsys):
    p = tmp_path / "abstract.json"
    p.write_text(json.dumps({"edges": [[0, 1], [1, 2]]}))
    assert main(["discharge", "--graph", str(p)]) == 2


def test_audit_commands(capsys):
    assert main(["audit", "families"]) == 0
    assert main(["audit", "ineq6plus", "--dmax", "8"]) == 0
    assert main(["audit", "case-ledger"]) == 0


def test_audit_four_face_json(capsys):
    rc = main(["audit", "four-face", "--report", "json"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["findings"] == []
    assert data["surviving"] > 0


def test_schemes_run(tmp_path, capsys):
    cfg = {
        "graph": {"edges": [[0, 1], [0, 2]]},
        "profile": {"0": [11, 4], "1": [7, 4], "2": [7, 4]},
        "steps": [
            {"op": "save", "u": 0, "v": 1, "k": 1},
            {"op": "delete", "u": 1},
            {"op": "delete", "u": 0},
            {"op": "delete", "u": 2},
        ],
    }
    p = tmp_path / "scheme.json"
    p.write_text(json.dumps(cfg))
    rc = main(["schemes", "run", "--config", str(p), "--report", "json"])
    data = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert data["legal"] is True and data["exhaustive"] is True
    steps = data["branches"][0]["steps"]
    assert all({"inequality", "lhs", "rhs", "verdict"} <= set(s) for s in steps)


def test_schemes_run_concrete(tmp_path, capsys):
    cfg = {
        "graph": {"edges": [[0, 1]]},
        "mode": "concrete",
        "lists": {"0": [1, 2, 3], "1": [1, 2]},
        "demand": {"0": 1, "1": 1},
        "steps": [
            {"op": "assume", "name": "A", "size": 1, "subset_of": [0],
             "avoids": [1]},
            {"op": "color", "phi": {"0": ["A"]}},
            {"op": "delete", "u": 0},
            {"op": "delete", "u": 1},
        ],
    }
    p = tmp_path / "scheme.json"
    p.write_text(json.dumps(cfg))
    assert main(["schemes", "run", "--config", str(p)]) == 0
