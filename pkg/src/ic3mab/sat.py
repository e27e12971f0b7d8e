"""Incremental CDCL SAT solver with assumption-based solving.

MiniSat-family architecture: two-watched-literal propagation, first-UIP
conflict learning with basic minimization, VSIDS branching over a lazy heap,
phase saving, Luby restarts, activity-driven learned-clause reduction.

Literals use the same packed encoding as the AIGER frontend: variable v is
literal 2v, its negation 2v+1 (variables start at 1).  Solving under
assumptions reports a conflicting subset of the assumptions on Unsat, which
is what cube shrinking in the engine is built on.

Clauses added while a solve is not running take effect on the next call;
interleaving add_clause and solve is equivalent to solving the accumulated
clause set from scratch.
"""

from __future__ import annotations

import heapq
import os
import random

SAT = True
UNSAT = False
UNKNOWN = None

_UNASSIGNED = -1

# Branching hyperparameters (MiniSat defaults, fixed for determinism).
_VAR_DECAY = 0.95
_CLA_DECAY = 0.999
_RESTART_BASE = 100
_RANDOM_DECISION_FREQ = 0.02


def _luby(i: int) -> int:
    """i-th element (1-based) of the Luby restart sequence."""
    k = 1
    while (1 << (k + 1)) - 1 <= i:
        k += 1
    while (1 << k) - 1 != i:
        i = i - (1 << (k - 1)) + 1
        k = 1
        while (1 << (k + 1)) - 1 <= i:
            k += 1
    return 1 << (k - 1)


class Clause:
    __slots__ = ("lits", "act", "learnt")

    def __init__(self, lits: list[int], learnt: bool) -> None:
        self.lits = lits
        self.act = 0.0
        self.learnt = learnt


class Solver:
    def __init__(self, seed: int = 0) -> None:
        self.nvars = 0
        self.val: list[int] = [_UNASSIGNED, _UNASSIGNED]  # indexed by literal
        self.watches: list[list[Clause]] = [[], []]
        self.reason: list[Clause | None] = [None]
        self.level: list[int] = [0]
        self.activity: list[float] = [0.0]
        self.saved_phase: list[int] = [0]
        self.stamp: list[int] = [0]
        self.heap: list[tuple[float, int, int]] = []
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.clauses: list[Clause] = []
        self.learnts: list[Clause] = []
        self.ok = True
        self.var_inc = 1.0
        self.cla_inc = 1.0
        self.max_learnts = 2000.0
        self.rng = random.Random(seed)
        self.model: list[int] = []
        self.failed: list[int] = []
        self.conflicts = 0
        self.propagations = 0
        self.decisions = 0
        self.solves = 0
        self.dump_dir: str | None = None
        self._seen: list[bool] = [False]

    # -- variable and clause management ------------------------------------

    def new_var(self) -> int:
        self.nvars += 1
        v = self.nvars
        self.val.extend((_UNASSIGNED, _UNASSIGNED))
        self.watches.append([])
        self.watches.append([])
        self.reason.append(None)
        self.level.append(0)
        self.activity.append(0.0)
        self.saved_phase.append(0)
        self.stamp.append(0)
        self._seen.append(False)
        self._heap_push(v)
        return v

    def ensure_vars(self, n: int) -> None:
        while self.nvars < n:
            self.new_var()

    def add_clause(self, lits: list[int]) -> bool:
        """Add a clause over packed literals.  Returns False once the clause
        set is unsatisfiable at level 0 (and stays False)."""
        if not self.ok:
            return False
        assert not self.trail_lim, "clauses must be added at decision level 0"
        out: list[int] = []
        seen: set[int] = set()
        for lit in sorted(lits):
            if lit ^ 1 in seen:
                return True  # tautology, silently dropped
            if lit in seen or self.val[lit] == 0 and self.level[lit >> 1] == 0:
                continue  # duplicate or false at top level
            if self.val[lit] == 1 and self.level[lit >> 1] == 0:
                return True  # already satisfied at top level
            seen.add(lit)
            out.append(lit)
        if not out:
            self.ok = False
            return False
        if len(out) == 1:
            self._assign(out[0], None)
            if self._propagate() is not None:
                self.ok = False
                return False
            return True
        c = Clause(out, learnt=False)
        self.clauses.append(c)
        self.watches[out[0]].append(c)
        self.watches[out[1]].append(c)
        return True

    # -- assignment control -------------------------------------------------

    def _assign(self, lit: int, reason: Clause | None) -> None:
        self.val[lit] = 1
        self.val[lit ^ 1] = 0
        v = lit >> 1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.saved_phase[v] = 1 - (lit & 1)
        self.trail.append(lit)

    def _cancel_until(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        bound = self.trail_lim[lvl]
        for i in range(len(self.trail) - 1, bound - 1, -1):
            lit = self.trail[i]
            self.val[lit] = _UNASSIGNED
            self.val[lit ^ 1] = _UNASSIGNED
            self.reason[lit >> 1] = None
            self._heap_push(lit >> 1)
        del self.trail[bound:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    # -- propagation ---------------------------------------------------------

    def _propagate(self) -> Clause | None:
        val = self.val
        watches = self.watches
        while self.qhead < len(self.trail):
            p = self.trail[self.qhead]
            self.qhead += 1
            false_lit = p ^ 1
            ws = watches[false_lit]
            keep = 0
            i = 0
            n = len(ws)
            while i < n:
                c = ws[i]
                i += 1
                lits = c.lits
                # Normalize so the false literal sits at position 1.
                if lits[0] == false_lit:
                    lits[0] = lits[1]
                    lits[1] = false_lit
                first = lits[0]
                if val[first] == 1:
                    ws[keep] = c
                    keep += 1
                    continue
                moved = False
                for k in range(2, len(lits)):
                    lk = lits[k]
                    if val[lk] != 0:
                        lits[1] = lk
                        lits[k] = false_lit
                        watches[lk].append(c)
                        moved = True
                        break
                if moved:
                    continue
                ws[keep] = c
                keep += 1
                if val[first] == 0:
                    # Conflict: keep remaining watchers in place.
                    while i < n:
                        ws[keep] = ws[i]
                        keep += 1
                        i += 1
                    del ws[keep:]
                    self.qhead = len(self.trail)
                    self.propagations += 1
                    return c
                self._assign(first, c)
            del ws[keep:]
            self.propagations += 1
        return None

    # -- branching heuristics -------------------------------------------------

    def _heap_push(self, v: int) -> None:
        self.stamp[v] += 1
        heapq.heappush(self.heap, (-self.activity[v], v, self.stamp[v]))

    def _bump_var(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for u in range(1, self.nvars + 1):
                self.activity[u] *= 1e-100
            self.var_inc *= 1e-100
        if self.val[2 * v] == _UNASSIGNED:
            self._heap_push(v)

    def _pick_branch_var(self) -> int:
        if self.rng.random() < _RANDOM_DECISION_FREQ:
            for _ in range(10):
                v = self.rng.randrange(1, self.nvars + 1)
                if self.val[2 * v] == _UNASSIGNED:
                    return v
        while self.heap:
            negact, v, st = self.heap[0]
            if self.val[2 * v] != _UNASSIGNED or st != self.stamp[v]:
                heapq.heappop(self.heap)
                continue
            if negact != -self.activity[v]:
                heapq.heappop(self.heap)
                self._heap_push(v)
                continue
            return v
        return 0

    # -- conflict analysis ----------------------------------------------------

    def _bump_clause(self, c: Clause) -> None:
        c.act += self.cla_inc
        if c.act > 1e20:
            for d in self.learnts:
                d.act *= 1e-20
            self.cla_inc *= 1e-20

    def _analyze(self, confl: Clause) -> tuple[list[int], int]:
        seen = self._seen
        learnt: list[int] = [0]
        cur_level = len(self.trail_lim)
        counter = 0
        p = -1
        index = len(self.trail) - 1
        while True:
            if confl.learnt:
                self._bump_clause(confl)
            for q in confl.lits:
                # Skip the literal this reason clause asserted (p ^ 1 is the
                # trail literal; p already holds its negation for learning).
                if q == p ^ 1:
                    continue
                v = q >> 1
                if not seen[v] and self.level[v] > 0:
                    seen[v] = True
                    self._bump_var(v)
                    if self.level[v] >= cur_level:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[self.trail[index] >> 1]:
                index -= 1
            p = self.trail[index] ^ 1
            v = p >> 1
            index -= 1
            seen[v] = False
            counter -= 1
            if counter == 0:
                break
            confl = self.reason[v]  # type: ignore[assignment]
        learnt[0] = p

        # Basic self-subsumption minimization.
        kept = [learnt[0]]
        for q in learnt[1:]:
            r = self.reason[q >> 1]
            if r is None:
                kept.append(q)
                continue
            for x in r.lits:
                xv = x >> 1
                if xv != q >> 1 and not seen[xv] and self.level[xv] > 0:
                    kept.append(q)
                    break
        removed = set(learnt[1:]) - set(kept[1:])
        learnt = kept

        back_level = 0
        if len(learnt) > 1:
            max_i = 1
            for i in range(2, len(learnt)):
                if self.level[learnt[i] >> 1] > self.level[learnt[max_i] >> 1]:
                    max_i = i
            learnt[1], learnt[max_i] = learnt[max_i], learnt[1]
            back_level = self.level[learnt[1] >> 1]
        for q in learnt:
            seen[q >> 1] = False
        for q in removed:
            seen[q >> 1] = False
        return learnt, back_level

    def _analyze_final(self, p: int) -> list[int]:
        """Failed-assumption subset when assumption literal p is false."""
        out = [p]
        if not self.trail_lim:
            return out
        seen = self._seen
        seen[p >> 1] = True
        for i in range(len(self.trail) - 1, self.trail_lim[0] - 1, -1):
            lit = self.trail[i]
            v = lit >> 1
            if not seen[v]:
                continue
            r = self.reason[v]
            if r is None:
                out.append(lit)
            else:
                for x in r.lits:
                    if self.level[x >> 1] > 0:
                        seen[x >> 1] = True
            seen[v] = False
        seen[p >> 1] = False
        return out

    # -- learned clause housekeeping -------------------------------------------

    def _locked(self, c: Clause) -> bool:
        l0 = c.lits[0]
        return self.val[l0] == 1 and self.reason[l0 >> 1] is c

    def _reduce_db(self) -> None:
        order = sorted(
            range(len(self.learnts)), key=lambda i: (self.learnts[i].act, -i)
        )
        drop = set()
        target = len(self.learnts) // 2
        for i in order:
            if len(drop) >= target:
                break
            c = self.learnts[i]
            if len(c.lits) > 2 and not self._locked(c):
                drop.add(id(c))
        if not drop:
            return
        self.learnts = [c for c in self.learnts if id(c) not in drop]
        for wl in self.watches:
            wl[:] = [c for c in wl if id(c) not in drop]

    # -- main search -----------------------------------------------------------

    def solve(
        self, assumptions: list[int] | None = None, max_conflicts: int | None = None
    ) -> bool | None:
        """Solve under the given assumption literals.

        Returns SAT/UNSAT, or UNKNOWN when the conflict budget runs out
        (distinct from Unsat).  On SAT the model is total; on UNSAT
        self.failed holds a subset of the assumptions whose conjunction is
        contradictory with the clause set.
        """
        assumps = list(assumptions or [])
        self.model = []
        self.failed = []
        self.solves += 1
        if self.dump_dir is not None:
            self._dump_query(assumps)
        if not self.ok:
            return UNSAT
        if self._propagate() is not None:
            self.ok = False
            return UNSAT
        start_conflicts = self.conflicts
        restart_num = 1
        restart_budget = _RESTART_BASE * _luby(restart_num)
        while True:
            confl = self._propagate()
            if confl is not None:
                self.conflicts += 1
                if not self.trail_lim:
                    self.ok = False
                    return UNSAT
                learnt, back_level = self._analyze(confl)
                self._cancel_until(back_level)
                if len(learnt) == 1:
                    self._cancel_until(0)
                    self._assign(learnt[0], None)
                else:
                    c = Clause(learnt, learnt=True)
                    self.learnts.append(c)
                    self._bump_clause(c)
                    self.watches[learnt[0]].append(c)
                    self.watches[learnt[1]].append(c)
                    self._assign(learnt[0], c)
                self.var_inc /= _VAR_DECAY
                self.cla_inc /= _CLA_DECAY
                if max_conflicts is not None and self.conflicts - start_conflicts >= max_conflicts:
                    self._cancel_until(0)
                    return UNKNOWN
                if self.conflicts - start_conflicts >= restart_budget:
                    restart_num += 1
                    restart_budget += _RESTART_BASE * _luby(restart_num)
                    self._cancel_until(0)
                continue
            if len(self.learnts) >= self.max_learnts:
                self._reduce_db()
                self.max_learnts *= 1.3
            lvl = len(self.trail_lim)
            if lvl < len(assumps):
                p = assumps[lvl]
                if self.val[p] == 1:
                    self.trail_lim.append(len(self.trail))
                    continue
                if self.val[p] == 0:
                    self.failed = self._analyze_final(p)
                    self._cancel_until(0)
                    return UNSAT
                self.trail_lim.append(len(self.trail))
                self._assign(p, None)
                continue
            v = self._pick_branch_var()
            if v == 0:
                self.model = self.val.copy()
                self._cancel_until(0)
                return SAT
            self.decisions += 1
            self.trail_lim.append(len(self.trail))
            self._assign(2 * v + (0 if self.saved_phase[v] else 1), None)

    def model_value(self, lit: int) -> bool:
        """Value of a literal in the last SAT model (total assignment)."""
        assert self.model, "no model available"
        return self.model[lit] == 1

    # -- external cross-checking -----------------------------------------------

    def _dump_query(self, assumps: list[int]) -> None:
        assert self.dump_dir is not None
        os.makedirs(self.dump_dir, exist_ok=True)
        path = os.path.join(self.dump_dir, f"query{self.solves:06d}.cnf")

        def dimacs(lit: int) -> int:
            return (lit >> 1) * (-1 if lit & 1 else 1)

        with open(path, "w") as fh:
            nc = len(self.clauses) + len(assumps) + sum(
                1 for lit in self.trail if self.level[lit >> 1] == 0
            )
            fh.write(f"p cnf {self.nvars} {nc}\n")
            fh.write("c assumptions appended as unit clauses\n")
            for lit in self.trail:
                if self.level[lit >> 1] == 0:
                    fh.write(f"{dimacs(lit)} 0\n")
            for c in self.clauses:
                fh.write(" ".join(str(dimacs(l)) for l in c.lits) + " 0\n")
            for lit in assumps:
                fh.write(f"{dimacs(lit)} 0\n")

    def check_model(self) -> bool:
        """Debug helper: every original clause satisfied by the stored model."""
        for c in self.clauses:
            if not any(self.model[l] == 1 for l in c.lits):
                return False
        return True
