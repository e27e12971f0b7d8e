"""End-to-end engine behavior on bundled circuits."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

from ic3mab import EngineConfig, Ic3Engine, check, certify
from ic3mab.aiger import parse_aiger_file
from ic3mab.config import ENGINE_MODES
from ic3mab.system import to_transition_system

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
sys.path.insert(0, str(Path(__file__).resolve().parent))
from oracles import reachability, read_aag  # noqa: E402

FAST = [
    "cnt_unsafe_n3.aag",
    "cnt_mod_safe_n4.aag",
    "ring_safe_n06.aag",
    "shift_unsafe_n5.aag",
    "mirror_safe_n4.aag",
    "mutex_safe.aag",
    "edge_badtrue_unsafe.aag",
    "edge_badfalse_safe.aag",
    "edge_xreset_safe.aag",
    "edge_constr_safe.aag",
]


def run(name: str, mode: str = "mab", seed: int = 0, **kw):
    model = parse_aiger_file(str(CORPUS / name))
    cfg = EngineConfig(mode=mode, seed=seed, **kw)
    return model, check(to_transition_system(model, cfg.property_index), cfg)


@pytest.mark.parametrize("mode", ENGINE_MODES)
def test_verdicts_match_oracle_fast_subset(mode):
    for name in FAST:
        want, _ = reachability(read_aag(str(CORPUS / name)))
        model, res = run(name, mode)
        assert res.status == want, (name, mode)
        ok, why = certify(res, model)
        assert ok, (name, mode, why)


def test_deterministic_counter_traces_are_shortest():
    # Counters have a single path, so the trace length is forced.
    for name in ("cnt_unsafe_n3.aag", "cnt_unsafe_n4.aag"):
        _, depth = reachability(read_aag(str(CORPUS / name)))
        _, res = run(name)
        assert len(res.trace) == depth + 1


def test_zero_length_counterexample():
    _, res = run("edge_badinit_unsafe.aag")
    assert res.status == "unsafe" and len(res.trace) == 1
    _, res = run("edge_badtrue_unsafe.aag")
    assert res.status == "unsafe" and len(res.trace) == 1


def test_safe_invariant_is_exposed():
    _, res = run("cnt_sat_safe_n3.aag", mode="standard")
    assert res.status == "safe"
    assert res.invariant is not None and len(res.invariant) >= 1
    assert all(isinstance(c, tuple) for c in res.invariant)
    _, res = run("edge_badfalse_safe.aag", mode="standard")
    assert res.invariant == []  # nothing to block: empty invariant


def test_event_stream_schema():
    _, res = run("cnt_unsafe_n4.aag", mode="mab")
    assert res.events, "generalization happened, events must exist"
    keys = [
        "t", "context", "arm", "params", "orig_size", "gen_size",
        "obligation_frame", "pushed_frame", "frontier", "R_s", "R_p", "R_b",
        "events", "reward",
    ]
    for t, ev in enumerate(res.events):
        assert list(ev.keys()) == keys
        assert ev["t"] == t
        assert len(ev["context"]) == 7
        assert 0 <= ev["arm"] < 7
        assert set(ev["params"]) == {"ctgMax", "ctgDepth", "exctgBudget"}
        assert ev["orig_size"] >= ev["gen_size"] >= 1 or ev["gen_size"] > ev["orig_size"]


def test_non_bandit_modes_log_null_arm():
    for mode in ("standard", "ctgdown", "dynamic"):
        _, res = run("cnt_unsafe_n3.aag", mode=mode)
        assert res.events and all(ev["arm"] is None for ev in res.events)


def test_event_log_file_matches_memory(tmp_path):
    log = tmp_path / "ev.jsonl"
    _, res = run("cnt_unsafe_n4.aag", mode="mab", log_path=str(log))
    on_disk = [json.loads(l) for l in log.read_text().splitlines()]
    assert on_disk == res.events


def test_seeded_runs_reproduce_exactly():
    a = run("guard_safe_n09.aag", mode="mab", seed=5)[1]
    b = run("guard_safe_n09.aag", mode="mab", seed=5)[1]
    assert a.status == b.status and a.level == b.level
    assert json.dumps(a.events) == json.dumps(b.events)
    assert a.stats == b.stats


def test_arm_subset_restricts_selection():
    _, res = run("cnt_unsafe_n4.aag", mode="mab", arm_subset=(2, 3))
    assert res.events
    assert set(ev["arm"] for ev in res.events) <= {2, 3}


def test_property_index_selects_property():
    _, res = run("edge_multiprop.aag", mode="standard", property_index=1)
    assert res.status == "safe" and res.property_index == 1
    _, res = run("edge_multiprop.aag", mode="standard", property_index=0)
    assert res.status == "unsafe"


def test_conflict_budget_yields_budget_status():
    _, res = run("guard_safe_n10.aag", mode="standard", max_conflicts_per_query=1)
    assert res.status == "budget"
    assert not res.solved
    assert res.invariant is None and res.trace is None


def test_timeout_status():
    _, res = run("guard_safe_n12.aag", mode="standard", timeout=0.001)
    assert res.status == "timeout"
    assert not res.solved


def test_self_check_mode_runs_clean():
    _, res = run("cnt_mod_safe_n3.aag", mode="mab", self_check=True)
    assert res.status == "safe"


def test_frames_are_monotone_after_safe_run():
    model = parse_aiger_file(str(CORPUS / "cnt_sat_safe_n4.aag"))
    eng = Ic3Engine(to_transition_system(model), EngineConfig(mode="standard"))
    res = eng.run()
    assert res.status == "safe"
    # Delta encoding: a cube stored at level i is blocked at every j <= i;
    # no cube may appear twice across levels.
    seen = {}
    for lvl, cubes in enumerate(eng.stored):
        for cube in cubes:
            assert cube not in seen, (cube, seen.get(cube), lvl)
            seen[cube] = lvl


def test_stats_are_populated():
    _, res = run("cnt_unsafe_n4.aag", mode="mab")
    s = res.stats
    assert s.sat_calls > 0 and s.gen_calls > 0 and s.obligations > 0
    assert s.clauses_added >= s.gen_calls
