import io
import json
import subprocess
import sys

import pytest

from domrec.cli import main
from domrec.constructions import GadgetKind, make_gadget
from domrec.graph import parse_graph6, to_edge_list, to_graph6


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def gadget_file(tmp_path):
    G = make_gadget(GadgetKind.C_GADGET).graph
    p = tmp_path / "c.g6"
    p.write_text(to_graph6(G) + "\n")
    labels = tmp_path / "c.json"
    labels.write_text(json.dumps({G.label(v): v for v in range(G.n)}))
    return str(p), str(labels)


def test_param(gadget_file):
    path, labels = gadget_file
    assert run("param", "--input", path, "--variant", "gamma-id") == (0, "3\n")
    assert run("param", "--input", "K4-e", "--variant", "gamma") == (0, "1\n")
    assert run("param", "--input", "3K1", "--variant", "gamma-t") == (0, "undefined\n")
    assert run("param", "--input", "K2", "--variant", "gamma-id") == (0, "infinity\n")


def test_param_on_connelly(tmp_path):
    g6 = tmp_path / "fan.g6"
    code, text = run("construct", "--target", "connelly", "--h", "K4-e")
    g6.write_text(text)
    assert parse_graph6(text.strip()).n == 9
    assert run("param", "--input", str(g6), "--variant", "gamma") == (0, "2\n")
    code, text = run("sets", "--input", str(g6), "--variant", "gamma")
    assert code == 0 and len(text.splitlines()) == 4


def test_sets_labels(gadget_file):
    path, labels = gadget_file
    assert run("sets", "--input", path, "--variant", "gamma-id") == (0, "0,1,2\n")
    assert run("sets", "--input", path, "--labels-in", labels,
               "--variant", "gamma-id") == (0, "x1,x2,x3\n")
    code, text = run("sets", "--input", path, "--labels-in", labels, "--variant", "gamma-id",
                     "--json")
    data = json.loads(text)
    assert data["value"] == 3 and data["sets"] == [{"vertices": [0, 1, 2],
                                                    "labels": ["x1", "x2", "x3"]}]
    assert run("sets", "--input", "K2", "--variant", "gamma-id", "--json")[1].count("infinity") == 1


def test_sets_k1(tmp_path):
    p = tmp_path / "k1.txt"
    p.write_text("1\n")
    assert run("sets", "--input", str(p), "--variant", "gamma") == (0, "0\n")


def test_edge_list_input(tmp_path):
    from domrec.graph import path as P
    p = tmp_path / "p3.txt"
    p.write_text(to_edge_list(P(3)))
    code, text = run("rgraph", "--input", str(p), "--variant", "k-dom", "--k", "2")
    data = json.loads(text)
    assert code == 0 and len(data["nodes"]) == 4 and len(data["edges"]) == 2


def test_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("Bw\n"))
    assert run("param", "--input", "-", "--variant", "gamma") == (0, "1\n")


def test_rgraph_models():
    code, slide = run("rgraph", "--input", "C4", "--variant", "gamma", "--out", "json")
    code, jump = run("rgraph", "--input", "C4", "--variant", "gamma", "--model", "jump")
    slide, jump = json.loads(slide), json.loads(jump)
    assert len(slide["nodes"]) == 6
    assert len(jump["edges"]) >= len(slide["edges"])
    code, dot = run("rgraph", "--input", "C4", "--variant", "gamma", "--out", "dot")
    assert dot.startswith("graph R {") and '"{0,1}"' in dot
    code, g6 = run("rgraph", "--input", "C4", "--variant", "gamma", "--out", "g6")
    assert parse_graph6(g6.strip()).n == 6


def test_construct_outputs(tmp_path):
    code, text = run("construct", "--target", "id", "--h", "K2")
    assert code == 0 and parse_graph6(text.strip()).n == 46
    base = parse_graph6(run("construct", "--target", "upper", "--h", "K2")[1].strip())
    more = parse_graph6(run("construct", "--target", "upper", "--h", "K2", "--extra", "1")[1].strip())
    assert more.n > base.n
    side = tmp_path / "labels.json"
    code, dot = run("construct", "--target", "locating", "--h", "K1", "--out", "dot",
                    "--labels", str(side))
    assert dot.startswith("graph") and json.loads(side.read_text())["v1"] == 0


def test_labels_sidecar_round_trip(tmp_path):
    g6, side = tmp_path / "g.g6", tmp_path / "g.json"
    g6.write_text(run("construct", "--target", "connelly", "--h", "P3", "--labels", str(side))[1])
    code, text = run("sets", "--input", str(g6), "--labels-in", str(side), "--variant", "gamma")
    assert text.splitlines() == ["v1,c", "v2,c", "v3,c"]


def test_verify_command():
    code, text = run("verify", "--h", "K4-e", "--variant", "gamma")
    assert code == 0 and json.loads(text)["isomorphic"] is True
    code, text = run("verify", "--h", "K1", "--variant", "upper")
    assert code == 0 and json.loads(text)["value"] == 7
    code, text = run("verify", "--h", "P3", "--variant", "gamma,gamma-t")
    assert code == 0 and [r["variant"] for r in json.loads(text)] == ["gamma", "gamma-t"]


def test_analyze_command():
    code, text = run("analyze", "--input", "P3", "--variant", "k-dom", "--k", "2", "--stuck",
                     "--frozen")
    data = json.loads(text)
    assert data["components"] == 2 and sorted(data["component_sizes"]) == [1, 3]
    iso = next(r for r in data["per_node"] if r["set"] == [0, 2])
    assert iso["stuck"] == iso["frozen"] == [0, 2]
    code, text = run("analyze", "--input", "K1", "--variant", "gamma")
    assert json.loads(text)["diameters"] == [0]


def test_analyze_connelly_frozen(tmp_path):
    g6 = tmp_path / "fan.g6"
    g6.write_text(run("construct", "--target", "connelly", "--h", "K4-e")[1])
    data = json.loads(run("analyze", "--input", str(g6), "--variant", "gamma", "--frozen")[1])
    assert {tuple(r["frozen"]) for r in data["per_node"]} == {(6,)}


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("B@\n")
    assert run("param", "--input", str(bad), "--variant", "gamma")[0] == 2
    assert run("param", "--input", "K2", "--variant", "nope")[0] == 3
    assert run("rgraph", "--input", "K2", "--variant", "gamma-id")[0] == 4
    assert run("rgraph", "--input", "K2", "--variant", "k-dom")[0] == 2
    assert run("rgraph", "--input", "K2", "--variant", "gamma", "--k", "1")[0] == 2
    empty = tmp_path / "empty.txt"
    empty.write_text("0\n")
    assert run("construct", "--target", "id", "--h", str(empty))[0] == 5
    assert run("verify", "--h", "K2", "--variant", "alpha")[0] == 3
    assert run("bogus")[0] == 2


def test_deterministic_output():
    argv = ("rgraph", "--input", "C5", "--variant", "gamma-pr", "--model", "jump", "--out", "dot")
    assert run(*argv) == run(*argv)
    argv = ("verify", "--h", "C4", "--variant", "gamma-c")
    assert run(*argv) == run(*argv)


def test_threads_environment(monkeypatch):
    monkeypatch.setenv("DOMREC_THREADS", "2")
    code, text = run("verify", "--h", "P3", "--variant", "gamma,ir")
    assert code == 0 and len(json.loads(text)) == 2
    assert run("--threads", "1", "param", "--input", "P3", "--variant", "alpha") == (0, "2\n")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "domrec", "param", "--input", "C5",
                           "--variant", "gamma"], capture_output=True, text=True, check=True)
    assert proc.stdout == "2\n"
