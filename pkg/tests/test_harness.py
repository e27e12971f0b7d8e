"""Bench harness: CSV round trips, PAR-2 scoring, subprocess isolation."""

from __future__ import annotations

import shutil
from pathlib import Path

from ic3mab import EngineConfig
from ic3mab.harness import (
    RunRecord,
    collect_instances,
    compute_par2,
    read_csv,
    run_bench,
    run_check,
    write_csv,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def rec(instance, mode, verdict, time):
    return RunRecord(
        instance=instance, mode=mode, verdict=verdict, time=time,
        level=1, clauses=1, gen_calls=1, seed=0,
    )


def test_par2_textbook_example():
    # Two solved at 10 s and 100 s plus one timeout at limit 3600 s.
    records = [
        rec("a", "standard", "safe", 10.0),
        rec("b", "standard", "unsafe", 100.0),
        rec("c", "standard", "timeout", 3600.0),
    ]
    s = compute_par2(records, limit=3600.0)["standard"]
    assert s.total == 3 and s.solved == 2
    assert s.par2 == (10 + 100 + 2 * 3600) / 3
    assert f"{s.par2:.2f}" == "2436.67"


def test_par2_groups_by_mode_and_penalizes_all_unsolved():
    records = [
        rec("a", "mab", "safe", 2.0),
        rec("a", "standard", "budget", 1.0),
        rec("b", "mab", "timeout", 60.0),
        rec("b", "standard", "timeout", 60.0),
    ]
    out = compute_par2(records, limit=60.0)
    assert out["mab"].par2 == (2.0 + 120.0) / 2
    assert out["standard"].par2 == 120.0
    assert out["standard"].solved == 0


def test_csv_roundtrip_preserves_exact_times():
    t = 0.1 + 0.2  # repr-faithful storage must survive the trip
    records = [rec("x", "mab", "safe", t), rec("y", "dynamic", "budget", 1e-7)]
    path = Path("/tmp/ic3mab_test_rt.csv")
    write_csv(records, path)
    back = read_csv(path)
    assert back == records
    assert back[0].time == t
    path.unlink()


def test_collect_instances_prefers_ascii_twin(tmp_path):
    shutil.copy(CORPUS / "cnt_unsafe_n3.aag", tmp_path / "a.aag")
    shutil.copy(CORPUS / "cnt_unsafe_n3.aig", tmp_path / "a.aig")
    shutil.copy(CORPUS / "mutex_safe.aig", tmp_path / "only_binary.aig")
    got = collect_instances(tmp_path)
    assert [p.name for p in got] == ["a.aag", "only_binary.aig"]


def test_run_check_in_process():
    record, result = run_check(CORPUS / "cnt_unsafe_n3.aag", EngineConfig(mode="mab"))
    assert record.verdict == result.status == "unsafe"
    assert record.instance == "cnt_unsafe_n3"
    assert record.level == result.level
    assert record.time == result.time


def test_run_bench_matrix(tmp_path):
    for name in ("cnt_unsafe_n3", "cnt_sat_safe_n3"):
        shutil.copy(CORPUS / f"{name}.aag", tmp_path / f"{name}.aag")
    out = tmp_path / "results.csv"
    records = run_bench(
        tmp_path, ["standard", "mab"], timeout=60.0, jobs=2, out_csv=out, seed=0
    )
    assert len(records) == 4
    assert [r.instance for r in records] == sorted(r.instance for r in records)
    verdicts = {(r.instance, r.mode): r.verdict for r in records}
    assert verdicts[("cnt_unsafe_n3", "standard")] == "unsafe"
    assert verdicts[("cnt_unsafe_n3", "mab")] == "unsafe"
    assert verdicts[("cnt_sat_safe_n3", "standard")] == "safe"
    assert verdicts[("cnt_sat_safe_n3", "mab")] == "safe"
    assert read_csv(out) == records


def test_run_bench_marks_parse_failures_as_budget(tmp_path):
    (tmp_path / "broken.aag").write_text("aag nope\n")
    records = run_bench(tmp_path, ["standard"], timeout=30.0, jobs=1,
                        out_csv=tmp_path / "r.csv", seed=0)
    assert len(records) == 1
    assert records[0].verdict == "budget"
