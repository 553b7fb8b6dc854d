from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from minkplanar.checks import catalog
from minkplanar.cli import main
from minkplanar.drawing import is_min_k_planar
from minkplanar.reduction import construction_counts, reduction_size


@pytest.fixture
def run(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    runner = CliRunner()

    def go(*args):
        return runner.invoke(main, list(args), catch_exceptions=False)

    return go


def write(name, obj):
    with open(name, "w") as fh:
        json.dump(obj, fh)


def test_enumerate_filter(run):
    r = run("--json", "enumerate", "--n", "5", "--out", "k5.json")
    assert r.exit_code == 0 and json.loads(r.output)["count"] == 5
    r = run("filter", "--in", "k5.json", "--k", "1", "--out", "k5f.json")
    assert r.exit_code == 0
    # only the 1-crossing drawing and one 3-crossing drawing have a singly crossed edge at every crossing
    want = sum(is_min_k_planar(d, 1) for d in catalog(5, "weak-iso"))
    assert json.load(open("k5f.json"))["manifest"]["count"] == want == 2
    first = open("k5.json").read()
    run("enumerate", "--n", "5", "--out", "k5.json")
    assert open("k5.json").read() == first


def test_decide_and_check(run):
    write("k4.json", {"vertices": list("abcd"), "edges": [list(e) for e in
                      ("ab", "ac", "ad", "bc", "bd", "cd")]})
    r = run("--json", "decide", "--graph", "k4.json", "--k", "0", "--out", "w.json")
    assert json.loads(r.output)["status"] == "yes"
    r = run("--json", "check-drawing", "--drawing", "w.json", "--k", "0")
    data = json.loads(r.output)
    assert data["valid"] and data["crossings"] == 0 and data["min_0_planar"]


def test_reduction_pipeline(run):
    write("inst.json", {"n": 1, "X": [1, 1, 3]})
    assert "yes" in run("solve3p", "--instance", "inst.json", "--out", "p.json").output
    r = run("--json", "reduce", "--instance", "inst.json", "--out", "art.json", "--no-c-edges")
    n_v, n_e = construction_counts(1, 5, c_edges=False)
    got = json.loads(r.output)
    assert (got["vertices"], got["edges"]) == (n_v, n_e)
    assert reduction_size(1, 5) == (n_v, n_e + 1)  # the single c-edge is the only difference
    r = run("--json", "yes-drawing", "--instance", "inst.json", "--partition", "p.json",
            "--out", "yes.json", "--no-c-edges")
    assert json.loads(r.output)["min1"] is True
    r = run("--json", "extract", "--artifact", "art.json", "--drawing", "yes.json")
    assert json.loads(r.output) == {"triplets": [[1, 2, 3]]}


def test_gadget_and_render(run):
    r = run("gadget", "--u", "p", "--v", "q", "--out", "g.json")
    assert r.exit_code == 0
    r = run("render", "--drawing", "g.json", "--out", "g.svg")
    assert r.exit_code == 0 and open("g.svg").read().startswith("<svg")
    r = CliRunner().invoke(main, ["render", "--drawing", "g.json", "--out", "x.svg", "--outer-face", "9999"])
    assert r.exit_code != 0 and "does not exist" in r.output


def test_paper_checks_zero_budget(run, tmp_path):
    r = run("--json", "paper-checks", "--budget", "0", "--out", "rep.json")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["summary"]["pass"] == 0 and data["summary"]["fail"] == 0


def test_solve3p_reports_no(run):
    write("no.json", {"n": 2, "X": [1, 1, 1, 1, 1, 2]})
    r = run("solve3p", "--instance", "no.json")
    assert "no" in r.output
