from __future__ import annotations

import json

from minkplanar.checks import Budget, VerificationReport, CheckResult, run_paper_checks


def test_zero_budget_skips_everything():
    rep = run_paper_checks(Budget.zero())
    assert rep.checks and all(c.status == "skipped" for c in rep.checks)
    assert rep.exit_code == 0
    assert rep.counts()["skipped"] == len(rep.checks)


def test_selected_checks_and_stable_json():
    sel = lambda c: c.name in ("c5.gadget", "c1.catalog.k4", "c2.min1.count")  # noqa: E731
    a = run_paper_checks(Budget(), only=sel)
    b = run_paper_checks(Budget(), only=sel)
    assert a.dumps(timings=False) == b.dumps(timings=False)
    data = json.loads(a.dumps())
    names = [c["name"] for c in data["checks"]]
    assert names == sorted(names)
    ran = {c["name"]: c["status"] for c in data["checks"] if c["status"] != "skipped"}
    assert ran == {"c1.catalog.k4": "pass", "c2.min1.count": "pass", "c5.gadget": "pass"}
    assert all(c["provenance"] in ("PAPER", "DERIVED", "TRIVIAL") for c in data["checks"])
    assert "seconds" in data["meta"]


def test_exit_code_reflects_failures():
    rep = VerificationReport([CheckResult("x", 0, "plumbing", "TRIVIAL", 1, 2, "fail")])
    assert rep.exit_code == 1
    assert "FAIL" in rep.human()
