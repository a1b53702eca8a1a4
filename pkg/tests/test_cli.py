import json

import pytest

from selt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_enumerate_json(capsys):
    code, out = run(capsys, "enumerate", "--outer", "3,2", "--inner", "2,1",
                    "--labels", "5")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == len(data["tableaux"]) >= 2
    edge_sets = [t["edges"] for t in data["tableaux"]]
    assert {"1": [1], "2": [2, 4]} in edge_sets
    assert {"2": [1, 2, 4]} in edge_sets


def test_enumerate_ascii(capsys):
    code, out = run(capsys, "enumerate", "--outer", "3,2", "--inner", "2,1",
                    "--labels", "5", "--format", "ascii")
    assert code == 0
    assert out.count("# tableau") >= 2


def test_enumerate_single_and_empty(capsys):
    code, out = run(capsys, "enumerate", "--outer", "1", "--inner", "1",
                    "--labels", "1")
    assert code == 0 and json.loads(out)["count"] == 1
    code, out = run(capsys, "enumerate", "--outer", "-", "--inner", "-",
                    "--labels", "0")
    assert code == 0 and json.loads(out)["count"] == 1


def test_enumerate_bad_partition_exits_2(capsys):
    assert run(capsys, "enumerate", "--outer", "2,3", "--labels", "2")[0] == 2


def test_enumerate_capacity_exits_3(capsys):
    assert run(capsys, "enumerate", "--outer", "2,1", "--labels", "1")[0] == 3


def test_rectify_trace(capsys):
    t = {"shape": {"outer": [3, 2], "inner": [2, 1]},
         "boxes": [{"row": 1, "col": 3, "label": 3},
                   {"row": 2, "col": 3, "label": 5}],
         "edges": {"1": [1], "2": [2, 4]}, "n": 5}
    code, out = run(capsys, "rectify", "--tableau", json.dumps(t))
    assert code == 0
    trace = json.loads(out)
    final = trace["states"][-1]
    assert final["shape"]["inner"] == []
    assert final["boxes"] == [
        {"row": 1, "col": 1, "label": 1}, {"row": 1, "col": 2, "label": 2},
        {"row": 1, "col": 3, "label": 3}, {"row": 2, "col": 2, "label": 4},
        {"row": 2, "col": 3, "label": 5},
    ]


def test_rectify_straight_shape_single_state(capsys):
    t = {"shape": {"outer": [2], "inner": []},
         "boxes": [{"row": 1, "col": 1, "label": 1},
                   {"row": 1, "col": 2, "label": 2}], "edges": {}, "n": 2}
    code, out = run(capsys, "rectify", "--tableau", json.dumps(t))
    assert code == 0
    assert len(json.loads(out)["states"]) == 1


def test_rectify_invalid_tableau_exits_2(capsys):
    t = {"shape": {"outer": [2], "inner": []},
         "boxes": [{"row": 1, "col": 1, "label": 2},
                   {"row": 1, "col": 2, "label": 1}], "edges": {}, "n": 2}
    assert run(capsys, "rectify", "--tableau", json.dumps(t))[0] == 2


def test_coeff_commands(capsys):
    code, out = run(capsys, "coeff", "d", "--lambda", "2,1", "--mu", "3,2",
                    "--nu", "3,2")
    assert code == 0 and json.loads(out)["value"] == 2
    code, out = run(capsys, "coeff", "frakd-eyd", "--lambda", "3,2,1",
                    "--mu", "2,1")
    assert code == 0 and json.loads(out)["value"] == 8
    code, out = run(capsys, "coeff", "frakD", "--lambda", "1", "--mu", "1",
                    "--nu", "2")
    assert code == 0 and json.loads(out)["z_polynomial"] == {"0": 2}
    code, out = run(capsys, "coeff", "frakd-ring", "--lambda", "2,1",
                    "--mu", "1", "--nu", "2,1")
    assert code == 0 and json.loads(out)["value"] == 2


def test_coeff_requires_nu(capsys):
    assert run(capsys, "coeff", "d", "--lambda", "1", "--mu", "1")[0] == 2


def test_check_pieri(capsys):
    code, out = run(capsys, "check", "pieri", "--max-n", "3")
    assert code == 0
    report = json.loads(out)
    assert report["counts"]["fail"] == 0
    assert report["counts"]["pass"] == len(report["cases"]) > 0


def test_check_conjecture_weight_zero_empty(capsys):
    code, out = run(capsys, "check", "conjecture", "--max-weight", "0")
    assert code == 0
    assert json.loads(out)["cases"] == []


def test_check_report_dir(tmp_path, capsys):
    code, _ = run(capsys, "check", "staircase", "--max-n", "2",
                  "--report-dir", str(tmp_path))
    assert code == 0
    assert (tmp_path / "cases.csv").exists()
    assert (tmp_path / "report.json").exists()
    assert (tmp_path / "summary.png").exists()
    header = (tmp_path / "cases.csv").read_text().splitlines()[0]
    assert header == "case,status,expected,actual"


def test_bijection_roundtrip(capsys):
    shading = {"n": 4, "m": 2, "shaded": [[1, 1], [2, 1], [3, 2]]}
    code, out = run(capsys, "bijection", "--shading", json.dumps(shading))
    assert code == 0
    t = json.loads(out)
    assert t["edges"] == {"2": [2, 5], "3": [1, 3], "4": [4, 6, 7]}
    code, out = run(capsys, "bijection", "--tableau", json.dumps(t))
    assert code == 0
    back = json.loads(out)
    assert back["n"] == 4 and back["m"] == 2
    assert sorted(map(tuple, back["shaded"])) == [(1, 1), (2, 1), (3, 2)]


def test_bijection_empty_shading_is_u(capsys):
    shading = {"n": 3, "m": 2, "shaded": []}
    code, out = run(capsys, "bijection", "--shading", json.dumps(shading))
    assert code == 0
    assert json.loads(out)["edges"] == {"1": [1], "2": [2, 4], "3": [3, 5]}


def test_bijection_not_slidable_exits_6(capsys):
    t = {"shape": {"outer": [2, 1], "inner": [2, 1]}, "boxes": [],
         "edges": {"1": [2], "2": [1]}, "n": 2}
    assert run(capsys, "bijection", "--tableau", json.dumps(t))[0] == 6


def test_bijection_requires_one_input(capsys):
    assert run(capsys, "bijection")[0] == 2
