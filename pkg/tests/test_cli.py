import json

import pytest

from heckemod.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_modify_examples(capsys):
    code, out, _ = run(capsys, "modify", "--q", "2", "--type", "0,0", "--point", "t^5+t^2+1",
                       "--weight", "1", "--subspace-index", "0")
    assert code == 0
    assert json.loads(out)["result"] in ([-5, 0], [-4, -1], [-3, -2])
    code, out, _ = run(capsys, "modify", "--weight", "2", "--type", "0,0", "--point", "t")
    assert json.loads(out)["result"] == [-1, -1]
    code, out, _ = run(capsys, "modify", "--type", "3,3", "--point", "t+1", "--weight", "1", "--subspace-index", "1")
    assert json.loads(out)["result"] == [2, 3]


def test_modify_functionals(capsys):
    code, out, _ = run(capsys, "modify", "--type", "0,3", "--point", "t", "--functionals", "0,1")
    assert code == 0 and json.loads(out)["result"] == [0, 2]


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--q", "2", "--type", "0,0", "--point-degree", "5", "--weight", "1")
    rec = json.loads(out)
    assert code == 0
    assert rec["total"] == 33
    assert sorted(r["count"] for r in rec["table"]) == [3, 6, 24]


def test_interpolate(capsys):
    code, out, _ = run(capsys, "interpolate", "--type", "0,0", "--point-degree", "2")
    rec = json.loads(out)
    assert rec["sum_rule"]["ok"] and rec["total"] == "q^2 + 1"


def test_graph_formats(capsys):
    code, dot, _ = run(capsys, "graph", "--point-degree", "1", "--weight", "1", "--window", "6", "--format", "dot")
    assert code == 0 and dot.startswith("digraph")
    for label in ('"1"', '"q"', '"q + 1"'):
        assert f"label={label}" in dot
    code, js, _ = run(capsys, "graph", "--point-degree", "1", "--window", "6")
    assert json.loads(js)["window"] == 6


def test_apply_and_commute(capsys):
    code, out, _ = run(capsys, "apply", "--point-degree", "1", "--window", "5", "--q", "3", "--delta", "2")
    vals = {r["vertex"]: r["value"] for r in json.loads(out)["values"]}
    assert vals[1] == "1" and vals[3] == "3" and vals[2] == "0"
    code, out, _ = run(capsys, "commute", "--window", "10")
    assert code == 0 and json.loads(out)["ok"]


def test_elliptic_transcript(capsys):
    code, out, _ = run(capsys, "elliptic")
    rec = json.loads(out)
    assert code == 0
    assert rec["point_tables"]["2"]["count"] == 5
    assert [d["check"] for d in rec["diagnostics"]][0] == "support"
    assert rec["multiplicities"]["printed_sum"] == "q^2 + 2"
    assert rec["multiplicities_at_q2"]["printed"] == {
        "E(1,1)_(x0,1) ⊕ E(1,1)_(x0,1)": "2", "E(2,2)_(x,1)": "3", "E(2,2)_(y,1)": "1",
    }
    code, again, _ = run(capsys, "elliptic")
    assert again == out


def test_elliptic_report(capsys):
    code, out, _ = run(capsys, "elliptic", "--format", "table")
    assert code == 0 and "diagnostics:" in out


def test_output_file(tmp_path, capsys):
    path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph", "--point-degree", "1", "--window", "4", "--format", "dot", "-o", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("digraph")


@pytest.mark.parametrize("argv,code", [
    (["modify", "--type", "0,0", "--point", "t^2+1"], 2),
    (["modify", "--type", "0,x", "--point", "t"], 2),
    (["modify", "--type", "0,0"], 2),
    (["table", "--q", "6", "--type", "0,0", "--point-degree", "1"], 2),
    (["table", "--q", "9", "--type", "0,0,0", "--point-degree", "3", "--cap", "100"], 3),
    (["graph", "--point-degree", "3", "--window", "2"], 2),
    (["apply", "--point-degree", "1", "--window", "4"], 2),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err.startswith("error")


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--criteria", "7,8")
    assert code == 0 and "2/2 criteria passed" in out
    code, out, _ = run(capsys, "selftest", "--criteria", "4", "--format", "json")
    assert code == 1 and json.loads(out)[0]["passed"] is False
