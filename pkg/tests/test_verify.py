"""Runner semantics: registry audit, dependency soundness, error surfacing,
report shape, and determinism of the cheap tasks."""

import json

import pytest
from gmpy2 import mpq

from nlsverify.tasks import dec
from nlsverify.verify import (
    REGISTRY,
    TASK_ORDER,
    make_report,
    registry_self_audit,
    resolve,
    run_tasks,
    write_report,
)


def test_dec_parser():
    assert dec("0.2008") == mpq(2008, 10**4)
    assert dec("1.5e-12") == mpq(15, 10**13)
    assert dec("4e-9") == mpq(4, 10**9)
    assert dec("-6.47e-10") == mpq(-647, 10**12)
    assert dec("3.2") == mpq(32, 10)
    assert dec("1e3") == 1000


def test_registry_audit_and_resolve():
    registry_self_audit()
    assert resolve(["V5"]) == ["V3", "V5"]
    assert resolve(["V13"]) == ["V2", "V3", "V11", "V12", "V13"]
    assert resolve(TASK_ORDER) == TASK_ORDER
    with pytest.raises(KeyError, match="no such task"):
        resolve(["V99"])


def test_unknown_task_is_an_error():
    with pytest.raises(KeyError):
        run_tasks(["nope"])


def test_empty_data_dir_reports_ingestion_errors(tmp_path):
    results = run_tasks(["V2", "V4"], data_dir=str(tmp_path))
    assert all(r.verdict == "error" for r in results)
    assert all("ingestion" in r.error for r in results)
    rep = make_report(results)
    assert rep["summary"]["failed"] == len(results)
    assert rep["summary"]["all_passed"] is False


def test_dependency_soundness(profile, monkeypatch):
    """Making V3 fail must surface in V5 as prereq-missing, never a pass."""
    import nlsverify.tasks as T

    def broken_v3(p, art, jobs):
        return T.TaskOutput(False, [], {})

    monkeypatch.setitem(REGISTRY, "V3", REGISTRY["V3"].__class__(
        "V3", REGISTRY["V3"].anchor, REGISTRY["V3"].claim, (), broken_v3))
    results = run_tasks(["V5"], profile=profile)
    by_id = {r.task_id: r for r in results}
    assert by_id["V3"].verdict == "fail"
    assert by_id["V5"].verdict == "prereq-missing"
    assert "V3" in by_id["V5"].error


def test_report_shape_and_determinism(profile, tmp_path):
    r1 = run_tasks(["V2", "V4"], profile=profile)
    r2 = run_tasks(["V2", "V4"], profile=profile)
    rep1 = write_report(r1, str(tmp_path / "a.json"))
    rep2 = write_report(r2, str(tmp_path / "b.json"))

    def strip_time(rep):
        out = json.loads(json.dumps(rep))
        for r in out["results"]:
            r.pop("elapsed_s")
        return out

    assert strip_time(rep1) == strip_time(rep2)
    assert rep1["schema"] == "nlsverify-report-v1"
    assert rep1["summary"]["all_passed"] is True
    loaded = json.loads((tmp_path / "a.json").read_text())
    assert loaded["summary"]["total"] == 2
    for r in loaded["results"]:
        assert {"task_id", "anchor", "claim", "computed", "verdict",
                "elapsed_s", "subchecks", "error"} <= set(r)
        assert r["claim"] == REGISTRY[r["task_id"]].claim


def test_cli_list_and_exit_codes(capsys):
    from nlsverify.cli import main
    assert main(["--list"]) == 0
    out = capsys.readouterr().out
    for tid in TASK_ORDER:
        assert tid in out
    assert main(["--task", "V99"]) == 2
