"""Inductive generalization: literal dropping with counterexample-to-
generalization (CTG) handling, parameterized per call.

A generalization strategy is a triple of knobs:

  ctg_max      how many CTGs may be blocked before falling back to joining
  ctg_depth    how deep recursive CTG handling may nest
  exctg_budget how many blocked CTGs get their own recursive generalization
               pass (per top-level generalization call)

The checker draws these either from a fixed table (one row per arm, plus
the per-mode baselines) or from activity-indexed dynamic maps that escalate
effort on cubes whose neighborhoods keep producing obligations.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple, Protocol


class GenParams(NamedTuple):
    ctg_max: int
    ctg_depth: int
    exctg_budget: int


BASIC = GenParams(0, 0, 0)


def _round_half_up(x: float) -> int:
    """Round half away from zero (inputs here are never negative)."""
    return math.floor(x + 0.5)


def dyn_balanced(a: float) -> GenParams:
    if a < 10:
        return BASIC
    if a < 40:
        return GenParams(math.floor((a - 10) / 10) + 2, 1, 1)
    return GenParams(5, 1, _round_half_up((a - 40) ** 0.3 * 2 + 5))


def dyn_aggressive(a: float) -> GenParams:
    if a < 5:
        return GenParams(1, 1, 1)
    if a < 25:
        return GenParams(math.floor((a - 5) / 8) + 3, 1, 2)
    return GenParams(6, 1, _round_half_up((a - 25) ** 0.3 * 2.5 + 6))


def dyn_conservative(a: float) -> GenParams:
    if a < 15:
        return BASIC
    if a < 50:
        return GenParams(min(math.floor((a - 15) / 12) + 1, 3), 0, 1)
    return GenParams(3, 1, min(_round_half_up((a - 50) ** 0.3 * 1.5 + 4), 6))


# Arm order is the selection index order; ties in scores resolve to the
# lowest index, so the plain strategy is the cold-start default.
ARMS: list[tuple[str, GenParams | Callable[[float], GenParams]]] = [
    ("basic", BASIC),
    ("conservative", GenParams(1, 3, 1)),
    ("balanced", GenParams(2, 5, 1)),
    ("aggressive", GenParams(8, 4, 1)),
    ("conservative-dyn", dyn_conservative),
    ("balanced-dyn", dyn_balanced),
    ("aggressive-dyn", dyn_aggressive),
]

NUM_ARMS = len(ARMS)

# Fixed parameterizations of the non-bandit engine modes.
MODE_PARAMS = {
    "standard": BASIC,
    "ctgdown": GenParams(1, 3, 0),
}


def params_for(arm: int, activity: float) -> GenParams:
    """Materialize an arm's knobs; dynamic arms consult the activity score."""
    spec = ARMS[arm][1]
    if callable(spec):
        return spec(activity)
    return spec


class ActivityTable:
    """Counts generalization attention per latch-variable signature.

    The signature of a cube is its sorted variable set, polarity ignored:
    repeated work on the same group of latches raises the score regardless
    of which corner of that subspace each obligation hits.  Every 256 bumps
    all scores halve; relative order is preserved.
    """

    DECAY_INTERVAL = 256
    DECAY_FACTOR = 0.5

    def __init__(self) -> None:
        self.scores: dict[tuple[int, ...], float] = {}
        self.bumps = 0

    @staticmethod
    def signature(cube: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(lit >> 1 for lit in cube)  # cubes are var-sorted

    def bump(self, cube: tuple[int, ...]) -> float:
        sig = self.signature(cube)
        self.scores[sig] = self.scores.get(sig, 0.0) + 1.0
        self.bumps += 1
        if self.bumps % self.DECAY_INTERVAL == 0:
            for key in self.scores:
                self.scores[key] *= self.DECAY_FACTOR
        return self.scores[sig]

    def score(self, cube: tuple[int, ...]) -> float:
        return self.scores.get(self.signature(cube), 0.0)


Cube = tuple[int, ...]


class BlockingInterface(Protocol):
    """What the generalizer needs from the engine.

    consecution(cube, j) asks whether states of F_j satisfying the cube's
    negation can reach the cube in one step: on Unsat it returns the cube
    shrunk to the failed assumptions with initiation repaired, on Sat the
    predecessor state restricted to the latches.
    """

    def consecution(self, cube: Cube, level: int) -> tuple[bool, Cube]: ...

    def add_blocked_cube(self, cube: Cube, level: int) -> int: ...

    def cube_intersects_init(self, cube: Cube) -> bool: ...


class Generalizer:
    """Drops literals from a relatively inductive cube to strengthen the
    learned clause, optionally blocking CTG states that obstruct drops."""

    def __init__(self, eng: BlockingInterface) -> None:
        self.eng = eng
        self.ctg_blocks = 0
        self.recursive_blocks = 0
        self._budget = 0

    def generalize(self, cube: Cube, level: int, params: GenParams) -> Cube:
        """Minimize `cube` subject to relative inductiveness at `level`.

        The input must already be relatively inductive to the frame below
        (the caller's Unsat result established that) and disjoint from the
        initial states.  The result is a sub-cube of the input, so the
        original counterexample state still falsifies the learned clause.
        """
        self._budget = params.exctg_budget
        self.recursive_blocks = 0
        return self._mic(cube, level, 0, params)

    def _mic(self, q: Cube, level: int, rec_depth: int, params: GenParams) -> Cube:
        one_pass = params == BASIC
        while True:
            changed = False
            for v in [lit >> 1 for lit in q]:
                vars_now = {lit >> 1 for lit in q}
                if v not in vars_now or len(q) == 1:
                    continue
                cand = tuple(lit for lit in q if lit >> 1 != v)
                res = self._ctg_down(cand, level, rec_depth, params)
                if res is not None:
                    q = res
                    changed = True
            if one_pass or not changed:
                return q

    def _ctg_down(
        self, q: Cube, level: int, rec_depth: int, params: GenParams
    ) -> Cube | None:
        """Establish relative inductiveness of a candidate cube, blocking or
        joining with counterexamples to generalization as they appear.
        Returns the (further shrunk) cube on success, None if the candidate
        has to be abandoned."""
        eng = self.eng
        ctgs = 0
        while True:
            if eng.cube_intersects_init(q):
                return None
            ok, out = eng.consecution(q, level - 1)
            if ok:
                return out
            t = out  # CTG: an F_{level-1} state with a step into q
            if (
                rec_depth < params.ctg_depth
                and ctgs < params.ctg_max
                and not eng.cube_intersects_init(t)
            ):
                ok2, t_core = eng.consecution(t, level - 1)
                if ok2:
                    ctgs += 1
                    self.ctg_blocks += 1
                    if self._budget > 0 and rec_depth + 1 <= params.ctg_depth:
                        self._budget -= 1
                        self.recursive_blocks += 1
                        t_core = self._mic(t_core, level, rec_depth + 1, params)
                    eng.add_blocked_cube(t_core, level)
                    continue
            # Join: keep only the literals the CTG agrees with.  The CTG
            # falsifies the candidate, so this strictly shrinks it.
            ctgs = 0
            t_set = set(t)
            joined = tuple(lit for lit in q if lit in t_set)
            if not joined or eng.cube_intersects_init(joined):
                return None
            q = joined
