"""Frame-based safety checking with adaptively parameterized generalization.

The checker maintains a sequence of frames F_0..F_k (clause sets over the
latches, delta-encoded: each learned clause lives at the highest frame where
it is known to hold).  The outer loop strengthens the frontier frame until
no bad-reaching state remains, propagates clauses forward, and declares the
system safe once two adjacent frames coincide.  Blocking works through an
explicit proof-obligation priority queue; each successful block runs the
generalization pipeline (context extraction, strategy selection, literal
dropping, intermediate push, reward, model update) and appends one record
to the JSONL event log.
"""

from __future__ import annotations

import heapq
import json
import time
from dataclasses import dataclass, field
from typing import TextIO

from .aiger import lit_neg
from .bandit import (
    CONTEXT_DIM,
    ContextExtractor,
    GenOutcome,
    LinUcb,
    RewardBreakdown,
    compute_reward,
)
from .config import EngineConfig
from .generalize import (
    ActivityTable,
    Generalizer,
    GenParams,
    MODE_PARAMS,
    NUM_ARMS,
    dyn_balanced,
    params_for,
)
from .sat import Solver, UNKNOWN, UNSAT
from .system import TransitionSystem

Cube = tuple[int, ...]

SAFE = "safe"
UNSAFE = "unsafe"
TIMEOUT = "timeout"
BUDGET = "budget"


class _Stop(Exception):
    """Internal control flow for timeout / conflict-budget exhaustion."""

    def __init__(self, kind: str) -> None:
        self.kind = kind


@dataclass
class Obligation:
    """One pending proof obligation: a concrete state cube that must be
    excluded from its frame (or shown reachable)."""

    cube: Cube
    frame: int
    depth: int  # blocking call-stack depth, 1 at the frontier
    parent: "Obligation | None"  # obligation this one is a predecessor of
    inputs: Cube  # input literals driving this state into parent (or firing bad)
    activity: float = 0.0


@dataclass
class RunStats:
    sat_calls: int = 0
    gen_calls: int = 0
    clauses_added: int = 0
    obligations: int = 0
    ctg_blocks: int = 0
    recursive_blocks: int = 0


@dataclass
class CheckResult:
    status: str  # safe | unsafe | timeout | budget
    level: int  # frontier at exit
    time: float
    property_index: int
    # Safe: list of blocked cubes whose negations form the invariant
    # (the property itself is implied; see certify()).
    invariant: list[Cube] | None
    # Unsafe: per step (latch values, input values), initial state first.
    trace: list[tuple[dict[int, int], dict[int, int]]] | None
    stats: RunStats
    events: list[dict] = field(default_factory=list)  # JSONL records, in order

    @property
    def solved(self) -> bool:
        return self.status in (SAFE, UNSAFE)


class Ic3Engine:
    def __init__(self, ts: TransitionSystem, config: EngineConfig) -> None:
        self.ts = ts
        self.cfg = config
        self.solver = Solver(seed=config.seed)
        if config.dump_cnf_dir:
            self.solver.dump_dir = config.dump_cnf_dir
        ts.load(self.solver)

        # acts[i] activates the clauses stored at frame i; a query against
        # F_i assumes acts[i..k] so delta-encoded clauses apply downward.
        self.acts: list[int] = []
        self.stored: list[set[Cube]] = []
        self._new_frame()
        for lit in ts.init_cube():
            self.solver.add_clause([2 * self.acts[0] + 1, lit])

        self.stats = RunStats()
        self.extractor = ContextExtractor()
        self.activity = ActivityTable()
        self.gen = Generalizer(self)
        self.bandit = (
            LinUcb(NUM_ARMS, CONTEXT_DIM, alpha=config.hyper.alpha)
            if config.mode == "mab"
            else None
        )
        self.events: list[dict] = []
        self._event_t = 0
        self._log: TextIO | None = None
        self._deadline: float | None = None
        self._last_inputs: Cube = ()
        self._heap: list[tuple[int, int, int, Obligation]] = []
        self._seq = 0

    # ---------------- frames ----------------

    @property
    def frontier(self) -> int:
        return len(self.acts) - 1

    def _new_frame(self) -> None:
        self.acts.append(self.solver.new_var())
        self.stored.append(set())

    def _frame_assumps(self, level: int) -> list[int]:
        return [2 * a for a in self.acts[level:]]

    def effective_clause_count(self, level: int) -> int:
        return sum(len(self.stored[j]) for j in range(level, len(self.stored)))

    def effective_cubes(self, level: int) -> list[Cube]:
        out: list[Cube] = []
        for j in range(level, len(self.stored)):
            out.extend(sorted(self.stored[j]))
        return out

    def _install(self, cube: Cube, level: int) -> None:
        lvl = min(level, self.frontier)
        self.stored[lvl].add(cube)
        self.solver.add_clause([2 * self.acts[lvl] + 1] + [lit_neg(l) for l in cube])
        self.stats.clauses_added += 1

    # ---------------- queries ----------------

    def _solve(self, assumps: list[int]):
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise _Stop(TIMEOUT)
        self.stats.sat_calls += 1
        res = self.solver.solve(assumps, max_conflicts=self.cfg.max_conflicts_per_query)
        if res is UNKNOWN:
            raise _Stop(BUDGET)
        return res

    def consecution(self, cube: Cube, level: int) -> tuple[bool, Cube]:
        """Can a state outside `cube` within F_level reach `cube` in one step?

        Unsat: (True, core) where core is the failed-assumption subset of
        the cube, repaired to stay disjoint from the initial states; the
        negation of any superset of core is installable at level+1.
        Sat: (False, predecessor) with the full-state predecessor cube; the
        driving inputs are kept for trace reconstruction.
        """
        ts = self.ts
        solver = self.solver
        tmp = solver.new_var()
        solver.add_clause([2 * tmp + 1] + [lit_neg(l) for l in cube])
        assumps = self._frame_assumps(level) + [2 * tmp] + ts.prime_cube(cube)
        res = self._solve(assumps)
        if res is UNSAT:
            failed = set(solver.failed)
            core = tuple(l for l in cube if l + ts.offset in failed)
            solver.add_clause([2 * tmp + 1])
            return True, self._repair_initiation(core, cube)
        pred = tuple(
            2 * v + (0 if solver.model_value(2 * v) else 1) for v in ts.latch_vars
        )
        self._last_inputs = tuple(
            2 * v + (0 if solver.model_value(2 * v) else 1) for v in ts.input_vars
        )
        solver.add_clause([2 * tmp + 1])
        return False, pred

    def _repair_initiation(self, core: Cube, cube: Cube) -> Cube:
        """Re-add the first cube literal contradicting every initial state
        when shrinking lost initiation (or emptied the cube)."""
        if core and not self.ts.intersects_init(core):
            return core
        init = self.ts.init_value
        for lit in cube:
            if init.get(lit >> 1) == (lit & 1):
                return tuple(sorted(set(core) | {lit}))
        raise AssertionError("unblockable cube: parent intersects initial states")

    def cube_intersects_init(self, cube: Cube) -> bool:
        return self.ts.intersects_init(cube)

    def push_clause(self, cube: Cube, level: int) -> int:
        """Greedily advance the clause to the highest frame (up to the
        frontier) where it stays relatively inductive."""
        j = level
        while j < self.frontier:
            ok, _ = self.consecution(cube, j)
            if not ok:
                break
            j += 1
        return j

    def add_blocked_cube(self, cube: Cube, level: int) -> int:
        j = self.push_clause(cube, level)
        self._install(cube, j)
        return j

    # ---------------- generalization pipeline ----------------

    def _select_arm(self, ctx: list[float]) -> int:
        assert self.bandit is not None
        subset = self.cfg.arm_subset
        if not subset:
            return self.bandit.select(ctx)
        scores = self.bandit.scores(ctx)
        best = subset[0]
        for a in subset[1:]:
            if scores[a] > scores[best]:
                best = a
        return best

    def _handle_blocked(self, ob: Obligation, core: Cube) -> int:
        k = self.frontier
        ctx = self.extractor.extract(
            depth=ob.depth,
            core_size=len(core),
            queue_len=len(self._heap),
            obligation_frame=ob.frame,
            frontier=k,
            frame_clauses=self.effective_clause_count(ob.frame),
        )
        ob.activity = self.activity.bump(ob.cube)
        mode = self.cfg.mode
        arm: int | None = None
        if mode == "mab":
            arm = self._select_arm(ctx)
            params = params_for(arm, ob.activity)
        elif mode == "dynamic":
            params = dyn_balanced(ob.activity)
        else:
            params = MODE_PARAMS[mode]

        gen_cube = self.gen.generalize(core, ob.frame, params)
        self.stats.gen_calls += 1
        self.stats.ctg_blocks = self.gen.ctg_blocks
        self.stats.recursive_blocks += self.gen.recursive_blocks
        pushed = self.add_blocked_cube(gen_cube, ob.frame)

        outcome = GenOutcome(len(core), len(gen_cube), ob.frame, pushed, k)
        br = compute_reward(outcome, self.cfg.hyper)
        if self.bandit is not None:
            self.bandit.update(ctx, arm, br.reward)
        self._log_event(ctx, arm, params, outcome, br)
        return pushed

    def _log_event(
        self,
        ctx: list[float],
        arm: int | None,
        params: GenParams,
        o: GenOutcome,
        br: RewardBreakdown,
    ) -> None:
        rec = {
            "t": self._event_t,
            "context": ctx,
            "arm": arm,
            "params": {
                "ctgMax": params.ctg_max,
                "ctgDepth": params.ctg_depth,
                "exctgBudget": params.exctg_budget,
            },
            "orig_size": o.orig_size,
            "gen_size": o.gen_size,
            "obligation_frame": o.obligation_frame,
            "pushed_frame": o.pushed_frame,
            "frontier": o.frontier,
            "R_s": br.r_size,
            "R_p": br.r_push,
            "R_b": br.r_bonus,
            "events": list(br.events),
            "reward": br.reward,
        }
        self._event_t += 1
        self.events.append(rec)
        if self._log is not None:
            self._log.write(json.dumps(rec) + "\n")

    # ---------------- obligation queue ----------------

    def _enqueue(self, ob: Obligation) -> None:
        self._seq += 1
        heapq.heappush(self._heap, (ob.frame, ob.depth, self._seq, ob))

    def _blocked_syntactically(self, cube: Cube, level: int) -> bool:
        s = set(cube)
        for j in range(level, len(self.stored)):
            for c in self.stored[j]:
                if s.issuperset(c):
                    return True
        return False

    def _block_from(self, root: Obligation):
        """Discharge the obligation queue seeded with `root`.

        Returns an unsafe trace when an obligation reaches the initial
        states, else None once everything is blocked.
        """
        self._heap.clear()
        self._enqueue(root)
        while self._heap:
            frame, depth, _, ob = heapq.heappop(self._heap)
            ob.frame, ob.depth = frame, depth
            self.stats.obligations += 1
            if frame == 0 or self.ts.intersects_init(ob.cube):
                return self._build_trace(ob)
            if self._blocked_syntactically(ob.cube, frame):
                if frame + 1 <= self.frontier:
                    ob.frame, ob.depth = frame + 1, depth + 1
                    self._enqueue(ob)
                continue
            ok, out = self.consecution(ob.cube, frame - 1)
            if not ok:
                pred = Obligation(out, frame - 1, depth + 1, ob, self._last_inputs)
                self._enqueue(pred)
                self._enqueue(ob)  # retry after the predecessor is handled
            else:
                pushed = self._handle_blocked(ob, out)
                if pushed + 1 <= self.frontier:
                    ob.frame, ob.depth = pushed + 1, depth + 1
                    self._enqueue(ob)
        return None

    @staticmethod
    def _build_trace(ob: Obligation) -> list[tuple[dict[int, int], dict[int, int]]]:
        steps = []
        node: Obligation | None = ob
        while node is not None:
            state = {l >> 1: 1 - (l & 1) for l in node.cube}
            inputs = {l >> 1: 1 - (l & 1) for l in node.inputs}
            steps.append((state, inputs))
            node = node.parent
        return steps

    # ---------------- outer loop ----------------

    def _check_init(self):
        """I ∧ ¬P: a length-0 counterexample (one evaluation, no step)."""
        ts = self.ts
        res = self._solve(self._frame_assumps(0) + [ts.cur(ts.bad_lit)])
        if res is UNSAT:
            return None
        state = {v: int(self.solver.model_value(2 * v)) for v in ts.latch_vars}
        inputs = {v: int(self.solver.model_value(2 * v)) for v in ts.input_vars}
        return [(state, inputs)]

    def _strengthen(self):
        ts = self.ts
        k = self.frontier
        while True:
            res = self._solve(self._frame_assumps(k) + [ts.cur(ts.bad_lit)])
            if res is UNSAT:
                return None
            cti = tuple(
                2 * v + (0 if self.solver.model_value(2 * v) else 1)
                for v in ts.latch_vars
            )
            inputs = tuple(
                2 * v + (0 if self.solver.model_value(2 * v) else 1)
                for v in ts.input_vars
            )
            trace = self._block_from(Obligation(cti, k, 1, None, inputs))
            if trace is not None:
                return trace

    def _propagate(self) -> list[Cube] | None:
        k = self.frontier
        for i in range(1, k):
            for cube in sorted(self.stored[i]):
                ok, _ = self.consecution(cube, i)
                if ok:
                    self.stored[i].discard(cube)
                    self.stored[i + 1].add(cube)
                    self.solver.add_clause(
                        [2 * self.acts[i + 1] + 1] + [lit_neg(l) for l in cube]
                    )
            if not self.stored[i]:
                return self.effective_cubes(i + 1)
        return None

    def _self_check(self) -> None:
        """Spot-check the frame chain: each stored clause still satisfies
        consecution one level below its slot (cheap sampled variant)."""
        for j in range(1, len(self.stored)):
            for cube in sorted(self.stored[j])[:3]:
                assumps = self._frame_assumps(j - 1) + self.ts.prime_cube(cube)
                assert self._solve(assumps) is UNSAT, (
                    f"frame condition violated at level {j}"
                )

    def run(self) -> CheckResult:
        cfg = self.cfg
        t0 = time.monotonic()
        self._deadline = t0 + cfg.timeout
        if cfg.log_path:
            self._log = open(cfg.log_path, "w")
        status = TIMEOUT
        invariant: list[Cube] | None = None
        trace = None
        try:
            trace = self._check_init()
            if trace is None:
                self._new_frame()
                while True:
                    trace = self._strengthen()
                    if trace is not None:
                        break
                    invariant = self._propagate()
                    if invariant is not None:
                        break
                    if cfg.self_check:
                        self._self_check()
                    self._new_frame()
            status = UNSAFE if trace is not None else SAFE
        except _Stop as stop:
            status = stop.kind
        finally:
            if self._log is not None:
                self._log.close()
                self._log = None
        return CheckResult(
            status=status,
            level=self.frontier,
            time=time.monotonic() - t0,
            property_index=self.ts.property_index,
            invariant=invariant,
            trace=trace,
            stats=self.stats,
            events=self.events,
        )


def check(ts: TransitionSystem, config: EngineConfig) -> CheckResult:
    return Ic3Engine(ts, config).run()
