from __future__ import annotations

import json

import pytest

from bct.campaigns import CAMPAIGNS, replay_violation, run_campaign, check_t2
from bct.fileformat import write_graph_file
from bct.families import path
from bct.graph import CapacityError


@pytest.mark.parametrize("cid,params", [
    ("T1", {"max_n": 4}), ("T2", {"max_n": 5}), ("T3", {"count": 20, "seed": 7}),
    ("T4", {"max_n": 4}), ("T5", {"max_n": 5}), ("T6", {"max_n": 7}), ("T7", {"max_n": 6}),
    ("T8", {"max_n": 4}), ("T9", {"max_n": 5}),
])
def test_small_campaigns_pass(cid, params):
    report = run_campaign(cid, params)
    assert report.passed, report.violations[:3]
    assert report.instances_checked > 0
    data = report.to_json()
    assert data["schema"] == 1 and data["capacity"]
    json.dumps(data)


def test_report_is_deterministic():
    a = run_campaign("T3", {"count": 10, "seed": 99}).to_json()
    b = run_campaign("T3", {"count": 10, "seed": 99}).to_json()
    a.pop("runtime"), b.pop("runtime")
    assert a == b


def test_unknown_campaign_and_capacity():
    with pytest.raises(KeyError):
        run_campaign("T99")
    with pytest.raises(CapacityError):
        run_campaign("T2", {"max_n": 9})


def test_violation_records_replay(monkeypatch):
    # a deliberately broken relation yields replayable violation records
    import bct.campaigns as camp

    def always_bad(g):
        return {"order": len(g)} if len(g) == 3 else None

    monkeypatch.setitem(camp._CHECKS, "T2", always_bad)
    report = run_campaign("T2", {"max_n": 3})
    assert not report.passed and len(report.violations) == 4
    for v in report.violations:
        assert replay_violation("T2", v["graph"]) == v["computed"]
    monkeypatch.setitem(camp._CHECKS, "T2", check_t2)
    assert replay_violation("T2", write_graph_file(path(3))) is None


def test_parallel_workers(monkeypatch):
    monkeypatch.setenv("BCT_THREADS", "2")
    serial = run_campaign("T2", {"max_n": 4})
    assert serial.passed and serial.instances_checked == 19


def test_registry():
    assert sorted(CAMPAIGNS, key=lambda c: int(c[1:])) == [f"T{i}" for i in range(1, 11)]
