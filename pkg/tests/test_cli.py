import io
import json
import subprocess
import sys

import pytest

from cmcodim2.cli import run

from conftest import EXAMPLE_GENS, SEVEN_EDGES

EXAMPLE = {"variables": [f"x{k}" for k in range(1, 7)], "generators": EXAMPLE_GENS}
SEVEN = {"vertices": 7, "edges": [list(e) for e in SEVEN_EDGES]}
C4 = {"vertices": 4, "edges": [[1, 2], [2, 3], [3, 4], [1, 4]]}


def call(*argv, data=None):
    out = io.StringIO()
    args = list(argv)
    if data is not None:
        args += ["--json", json.dumps(data)]
    code = run(args, stdout=out)
    text = out.getvalue()
    return code, (json.loads(text) if "--format" in argv and "json" in argv and text else text)


def j(cmd, data, *extra):
    return call(cmd, "--format", "json", *extra, data=data)


def test_check_cm_example():
    code, out = j("check-cm", EXAMPLE)
    assert code == 0
    assert out["cohen_macaulay"] is True
    assert out["witness"]["edges"] == [[1, 2], [2, 3], [3, 4]]


def test_check_cm_negative_verdicts():
    code, out = j("check-cm", {"variables": ["x1", "x2"], "generators": ["x1", "x1*x2"]})
    assert code == 3 and out["reason"] == "nonunit gcd"
    code, out = j("check-cm", {"variables": ["a", "b", "c"], "generators": ["a", "b", "c"]})
    assert code == 3 and out["reason"] == "no generating tree"


def test_check_cm_witness_rebuilds_ideal():
    _, out = j("check-cm", EXAMPLE)
    code, ideal = j("gen-from-tree", out["witness"])
    assert code == 0
    assert ideal == EXAMPLE


def test_gen_from_tree_generic():
    code, out = j("gen-from-tree", {"vertices": 3, "edges": [[1, 2], [2, 3]]})
    assert code == 0
    assert out["generators"] == ["x2_1*x3_2", "x1_2*x3_2", "x1_2*x2_3"]


def test_gen_from_tree_bad_labels_is_domain_error():
    tree = {
        "vertices": 2,
        "edges": [[1, 2]],
        "variables": ["x1"],
        "labels": [{"edge": [1, 2], "u_ij": "x1", "u_ji": "x1"}],
    }
    code, out = j("gen-from-tree", tree)
    assert code == 2 and out["kind"] == "domain" and out["reason"] == "label condition"


def test_decompose():
    code, out = j("decompose", {"vertices": 3, "edges": [[1, 2], [2, 3]]})
    assert code == 0
    assert out["components"] == [["x1_2", "x2_1"], ["x1_2", "x3_2"], ["x2_3", "x3_2"]]


def test_relation_trees_and_matrices():
    code, out = j("relation-trees", EXAMPLE, "--show-matrices", "--oracle")
    assert code == 0
    assert out["trees"] == [[[1, 2], [2, 3], [2, 4]], [[1, 2], [2, 3], [3, 4]]]
    assert out["matroid_exchange"] and out["oracle_agrees"]
    assert out["matrices"][1] == [["-x1", "x4", "0", "0"], ["0", "-x2", "x5", "0"], ["0", "0", "-x3*x5", "x6"]]
    code, text = call("relation-trees", data=EXAMPLE)
    assert code == 0 and "2 relation tree(s)" in text


def test_relation_trees_rejects_non_cm():
    code, out = j("relation-trees", {"variables": ["a", "b", "c"], "generators": ["a", "b", "c"]})
    assert code == 2 and out["reason"] == "no generating tree"


def test_taylor_graph_feeds_classify_graph():
    code, graph = j("taylor-graph", EXAMPLE)
    assert code == 0 and graph == {"vertices": 4, "edges": [[1, 2], [2, 3], [2, 4], [3, 4]]}
    code, out = j("classify-graph", graph)
    assert code == 0 and out == {"admissible": True, "reason": None}


def test_check_linear():
    code, out = j("check-linear", EXAMPLE)
    assert code == 3 and out == {"linear_resolution": False}
    code, out = j("check-linear", {"variables": ["x1", "x2", "x3"], "generators": ["x2*x3", "x1*x3", "x1*x2"]})
    assert code == 0 and out["linear_resolution"]


def test_compare_spanning():
    code, out = j("compare-spanning", EXAMPLE)
    assert code == 0
    assert out["verdict"] is False
    assert out["missing"] == [[[1, 2], [2, 4], [3, 4]]]
    assert (out["relation_tree_count"], out["spanning_tree_count"]) == (2, 3)


def test_realize_seven_vertex_example():
    code, out = j("realize", SEVEN)
    assert code == 0 and out["verified"]
    assert out["tree"]["edges"] == [[1, 3], [2, 3], [3, 4], [3, 5], [5, 6], [5, 7]]
    assert out["matrix"][0] == ["-x1_1", "0", "x1_3", "0", "0", "0", "0"]
    assert out["matrix"][5] == ["0", "0", "0", "0", "x4_5", "0", "-x4_7"]
    # the realized ideal's Taylor graph is the input graph again
    _, graph = j("taylor-graph", out["ideal"])
    assert graph == SEVEN


def test_realize_rejects_c4():
    code, out = j("realize", C4)
    assert code == 2 and out["reason"] == "not chordal"


def test_classify_graph_negatives():
    assert j("classify-graph", C4)[1] == {"admissible": False, "reason": "not chordal"}
    k4_minus = {"vertices": 4, "edges": [[1, 2], [1, 3], [2, 3], [1, 4], [2, 4]]}
    code, out = j("classify-graph", k4_minus)
    assert code == 0 and out["reason"] == "clique intersection condition"


def test_verify_matroid():
    code, out = j("verify-matroid", {"trees": [[[1, 2], [2, 3], [3, 4]], [[1, 2], [2, 3], [2, 4]]]})
    assert code == 0 and out == {"matroid_exchange": True}
    code, out = j("verify-matroid", [[[1, 2], [2, 3], [3, 4]], [[1, 2], [1, 3], [1, 4]]])
    assert code == 0 and out["matroid_exchange"] is False and "counterexample" in out


def test_relation_trees_output_feeds_verify_matroid():
    _, out = j("relation-trees", EXAMPLE)
    code, verdict = j("verify-matroid", {"trees": out["trees"]})
    assert code == 0 and verdict["matroid_exchange"] == out["matroid_exchange"]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["no-such-command"],
        ["check-cm"],
        ["check-cm", "--json", "{not json"],
        ["check-cm", "/nonexistent/file.json"],
        ["check-cm", "--format", "xml", "--json", "{}"],
        ["check-cm", "--jobs", "0", "--json", json.dumps(EXAMPLE)],
        ["check-cm", "--json", json.dumps({"variables": ["x1"], "generators": ["y7"]})],
        ["verify-matroid", "--json", "[]"],
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    assert run(argv, stdout=io.StringIO()) == 1


def test_usage_error_json_payload():
    code, out = call("check-cm", "--format", "json", "--json", "{}")
    assert code == 1 and out["kind"] == "usage"


def test_file_and_stdin_input(tmp_path, monkeypatch):
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps(EXAMPLE))
    assert call("check-cm", str(path))[0] == 0
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(EXAMPLE)))
    code, out = call("taylor-graph", "-", "--format", "json")
    assert code == 0 and out["edges"] == [[1, 2], [2, 3], [2, 4], [3, 4]]


def test_text_mode_output():
    code, text = call("realize", data=SEVEN)
    assert code == 0
    assert "attach vertices: 3, 5, 5" in text and "verified: True" in text


def test_jobs_gives_same_answer():
    a = j("relation-trees", EXAMPLE)[1]
    b = j("relation-trees", EXAMPLE, "--jobs", "2")[1]
    assert a == b


def test_dev_samples_are_deterministic():
    out1, out2 = io.StringIO(), io.StringIO()
    assert run(["dev", "cm", "--seed", "5", "--count", "3"], stdout=out1) == 0
    run(["dev", "cm", "--seed", "5", "--count", "3"], stdout=out2)
    assert out1.getvalue() == out2.getvalue()
    for item in json.loads(out1.getvalue())["samples"]:
        code, out = j("check-cm", item["ideal"])
        assert code == 0
    out = io.StringIO()
    run(["dev", "chordal", "--seed", "1", "--count", "2", "--max-vertices", "8"], stdout=out)
    for g in json.loads(out.getvalue())["samples"]:
        assert j("classify-graph", g)[1]["admissible"]


def test_dev_is_hidden_from_help(capsys):
    assert run(["--help"]) == 0
    listing = capsys.readouterr().out.split("positional arguments")[1].split("options:")[0]
    assert "check-cm" in listing
    assert not any(line.split()[:1] == ["dev"] for line in listing.splitlines())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cmcodim2", "check-cm", "--format", "json", "--json", json.dumps(EXAMPLE)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["cohen_macaulay"] is True
