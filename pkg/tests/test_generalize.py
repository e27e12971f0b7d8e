"""Generalization strategies: parameter tables, activity, CTG handling."""

from __future__ import annotations

import math

import pytest

from ic3mab.generalize import (
    ARMS,
    BASIC,
    MODE_PARAMS,
    NUM_ARMS,
    ActivityTable,
    Generalizer,
    GenParams,
    _round_half_up,
    dyn_aggressive,
    dyn_balanced,
    dyn_conservative,
    params_for,
)


def test_round_half_up():
    assert _round_half_up(0.0) == 0
    assert _round_half_up(0.49) == 0
    assert _round_half_up(0.5) == 1
    assert _round_half_up(1.5) == 2
    assert _round_half_up(2.4) == 2
    assert _round_half_up(2.5) == 3


@pytest.mark.parametrize(
    "fn,a,want",
    [
        (dyn_balanced, 5, (0, 0, 0)),
        (dyn_balanced, 10, (2, 1, 1)),
        (dyn_balanced, 25, (3, 1, 1)),
        (dyn_balanced, 39.99, (4, 1, 1)),
        (dyn_balanced, 40, (5, 1, 5)),
        (dyn_aggressive, 0, (1, 1, 1)),
        (dyn_aggressive, 5, (3, 1, 2)),
        (dyn_aggressive, 24.99, (5, 1, 2)),
        (dyn_aggressive, 25, (6, 1, 6)),
        (dyn_conservative, 10, (0, 0, 0)),
        (dyn_conservative, 15, (1, 0, 1)),
        (dyn_conservative, 49.99, (3, 0, 1)),
        (dyn_conservative, 50, (3, 1, 4)),
    ],
)
def test_dynamic_map_pinned_values(fn, a, want):
    assert fn(a) == GenParams(*want)


def test_arm_table_layout():
    assert NUM_ARMS == 7
    names = [name for name, _ in ARMS]
    assert names == [
        "basic",
        "conservative",
        "balanced",
        "aggressive",
        "conservative-dyn",
        "balanced-dyn",
        "aggressive-dyn",
    ]
    assert ARMS[0][1] == BASIC == GenParams(0, 0, 0)
    assert ARMS[1][1] == GenParams(1, 3, 1)
    assert ARMS[2][1] == GenParams(2, 5, 1)
    assert ARMS[3][1] == GenParams(8, 4, 1)
    assert MODE_PARAMS["standard"] == BASIC
    assert MODE_PARAMS["ctgdown"] == GenParams(1, 3, 0)


def test_params_for_static_vs_dynamic():
    assert params_for(3, 0.0) == GenParams(8, 4, 1)
    assert params_for(3, 99.0) == GenParams(8, 4, 1)  # static ignores activity
    assert params_for(5, 0.0) == dyn_balanced(0.0)
    assert params_for(5, 45.0) == dyn_balanced(45.0)
    assert params_for(4, 60.0) == dyn_conservative(60.0)
    assert params_for(6, 30.0) == dyn_aggressive(30.0)


def test_activity_signature_ignores_polarity():
    t = ActivityTable()
    assert t.bump((4, 7)) == 1.0
    assert t.bump((5, 6)) == 2.0  # same variables {2, 3}, other corner
    assert t.score((4, 6)) == 2.0
    assert t.score((4, 8)) == 0.0


def test_activity_decay_preserves_order():
    t = ActivityTable()
    for _ in range(10):
        t.bump((2,))
    for _ in range(245):
        t.bump((4,))
    assert t.score((2,)) == 10.0 and t.score((4,)) == 245.0
    t.bump((6,))  # bump number 256 triggers the halving
    assert t.score((2,)) == 5.0
    assert t.score((4,)) == 122.5
    assert t.score((6,)) == 0.5  # increment lands before the decay
    assert t.score((4,)) > t.score((2,)) > t.score((6,))


class ScriptedEngine:
    """Blocking interface stub driven by canned consecution responses."""

    def __init__(self, queues, init_lits=()):
        self.queues = {k: list(v) for k, v in queues.items()}
        self.init_lits = set(init_lits)
        self.blocked = []
        self.calls = []

    def consecution(self, cube, level):
        self.calls.append((tuple(cube), level))
        return self.queues[tuple(cube)].pop(0)

    def add_blocked_cube(self, cube, level):
        self.blocked.append((tuple(cube), level))
        return level

    def cube_intersects_init(self, cube):
        return any(l in self.init_lits for l in cube)

    def assert_consumed(self):
        assert all(not q for q in self.queues.values()), self.queues


def test_basic_single_pass_drops_to_core():
    # Core (4, 8) suffices; any candidate containing it reports that core.
    core = (4, 8)

    class Eng(ScriptedEngine):
        def consecution(self, cube, level):
            self.calls.append((tuple(cube), level))
            if set(core) <= set(cube):
                return True, core
            return False, tuple(l ^ 1 for l in cube)  # disjoint predecessor

    eng = Eng({})
    gen = Generalizer(eng)
    got = gen.generalize((2, 4, 6, 8), 3, BASIC)
    assert got == core
    assert eng.blocked == []
    assert gen.recursive_blocks == 0
    # One pass only: vars of the original cube each at most once.
    assert all(lvl == 2 for _, lvl in eng.calls)
    assert len(eng.calls) == 3  # var 1 collapses to the core; vars 2, 4 fail


def test_ctg_block_with_recursive_pass():
    eng = ScriptedEngine(
        {
            (4, 6): [(False, (3, 5, 9)), (True, (4, 6))],
            (3, 5, 9): [(True, (3, 5))],
            (5,): [(True, (5,))],
            (6,): [(False, (7, 9)), (False, (7, 9))],
            (4,): [(False, (7, 9)), (False, (7, 9))],
        },
        init_lits=(7,),
    )
    gen = Generalizer(eng)
    got = gen.generalize((2, 4, 6), 5, GenParams(1, 3, 1))
    assert got == (4, 6)
    assert gen.ctg_blocks == 1
    assert gen.recursive_blocks == 1  # the blocked CTG got its own MIC pass
    assert eng.blocked == [((5,), 5)]  # shrunk by recursion before install
    assert all(lvl == 4 for _, lvl in eng.calls)
    eng.assert_consumed()


def test_ctg_block_without_budget_installs_raw_core():
    eng = ScriptedEngine(
        {
            (4, 6): [(False, (3, 5, 9)), (True, (4, 6))],
            (3, 5, 9): [(True, (3, 5))],
            (6,): [(False, (7, 9)), (False, (7, 9))],
            (4,): [(False, (7, 9)), (False, (7, 9))],
        },
        init_lits=(7,),
    )
    gen = Generalizer(eng)
    got = gen.generalize((2, 4, 6), 5, MODE_PARAMS["ctgdown"])
    assert got == (4, 6)
    assert gen.ctg_blocks == 1
    assert gen.recursive_blocks == 0  # budget 0: no recursive generalization
    assert eng.blocked == [((3, 5), 5)]
    eng.assert_consumed()


def test_ctg_limit_falls_back_to_join():
    # Second CTG on the same candidate exceeds ctg_max=1: join shrinks the
    # candidate to the shared literals and the retry then succeeds.
    eng = ScriptedEngine(
        {
            (4, 6): [(False, (3, 5, 9)), (False, (4, 9))],
            (3, 5, 9): [(True, (3, 5))],
            (4,): [(True, (4,))],
        }
    )
    gen = Generalizer(eng)
    got = gen.generalize((2, 4, 6), 5, GenParams(1, 3, 0))
    assert got == (4,)
    assert gen.ctg_blocks == 1
    assert eng.blocked == [((3, 5), 5)]
    eng.assert_consumed()


def test_singleton_cube_untouched():
    eng = ScriptedEngine({})
    gen = Generalizer(eng)
    assert gen.generalize((2,), 4, BASIC) == (2,)
    assert eng.calls == []


def test_init_guard_blocks_candidate_before_any_query():
    # Dropping var 1 leaves (4,), which intersects the initial states; the
    # candidate must be abandoned without consulting the solver.
    eng = ScriptedEngine({(2,): [(True, (2,))]}, init_lits=(4,))
    gen = Generalizer(eng)
    assert gen.generalize((2, 4), 6, BASIC) == (2,)
    assert ((4,), 5) not in eng.calls
    eng.assert_consumed()
