"""Counterexample witnesses and invariant certificates.

Witness text follows the HWMCC convention: a status line ("1" bug found),
the property line ("b<index>"), one line of initial latch values, one line
of input values per step, and a terminating ".".  Certificates list the
invariant's clauses over 1-based latch positions (negative = latch is 0),
one clause per line, "0"-terminated, after an "inv <count>" header.

Both artifacts are independently checkable: witnesses replay through the
pure circuit simulator, certificates through fresh SAT queries that never
share state with the engine that produced them.
"""

from __future__ import annotations

from .aiger import AigerModel, lit_var
from .engine import CheckResult
from .sat import Solver, UNSAT
from .system import TransitionSystem, simulate_step, to_transition_system

Cube = tuple[int, ...]
Step = tuple[dict[int, int], dict[int, int]]


# ---------------- witness ----------------


def format_witness(result: CheckResult, model: AigerModel) -> str:
    if result.status == "safe":
        return "0\n"
    if result.status != "unsafe":
        return "2\n"
    assert result.trace, "unsafe verdict carries a non-empty trace"
    lines = ["1", f"b{result.property_index}"]
    first_state = result.trace[0][0]
    lines.append("".join(str(first_state[lit_var(la.lit)]) for la in model.latches))
    for _, inputs in result.trace:
        lines.append("".join(str(inputs[lit_var(l)]) for l in model.inputs))
    lines.append(".")
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> tuple[str, int, list[str], list[str]]:
    """Split witness text into (status, property index, latch line, input
    lines); safe/unknown witnesses yield empty trace parts.  Lines are
    positional: zero-input models legitimately produce empty input lines."""
    lines = text.splitlines()
    status = lines[0]
    if status != "1":
        return status, -1, [], []
    prop = int(lines[1][1:])
    latch_line = lines[2]
    end = lines.index(".")
    return status, prop, [latch_line], lines[3:end]


def replay_trace(
    model: AigerModel, trace: list[Step], property_index: int
) -> tuple[bool, str]:
    """Concretely simulate the trace: initial state consistent with resets,
    constraints hold at every step, the property fails at the last one."""
    if not trace:
        return False, "empty trace"
    for la in model.latches:
        if la.reset is None:
            continue
        if trace[0][0].get(lit_var(la.lit)) != la.reset:
            return False, f"initial value of latch {lit_var(la.lit)} != reset"
    for t, (state, inputs) in enumerate(trace):
        nxt, props, cons = simulate_step(model, state, inputs)
        if not all(cons):
            return False, f"constraint violated at step {t}"
        if t == len(trace) - 1:
            if props[property_index] != 1:
                return False, f"property b{property_index} not violated at the end"
        elif nxt != trace[t + 1][0]:
            return False, f"state mismatch entering step {t + 1}"
    return True, "ok"


# ---------------- certificate ----------------


def format_certificate(invariant: list[Cube], model: AigerModel) -> str:
    pos = {lit_var(la.lit): i + 1 for i, la in enumerate(model.latches)}
    lines = [f"inv {len(invariant)}"]
    for cube in invariant:
        # Clause = negation of the blocked cube: cube literal "latch is 1"
        # contributes "latch is 0" to the clause and vice versa.
        lits = [(pos[l >> 1] if l & 1 else -pos[l >> 1]) for l in cube]
        lines.append(" ".join(str(x) for x in lits) + " 0")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, model: AigerModel) -> list[Cube]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    assert head[0] == "inv" and len(lines) == int(head[1]) + 1
    latch_var = [lit_var(la.lit) for la in model.latches]
    cubes = []
    for ln in lines[1:]:
        toks = [int(t) for t in ln.split()]
        assert toks[-1] == 0
        cube = tuple(
            sorted(2 * latch_var[abs(t) - 1] + (1 if t > 0 else 0) for t in toks[:-1])
        )
        cubes.append(cube)
    return cubes


def certify_safe(
    model: AigerModel, property_index: int, invariant: list[Cube]
) -> tuple[bool, str]:
    """Check the three invariant conditions with fresh solvers: the initial
    states satisfy it, it is closed under the transition relation, and it
    excludes the bad states.  The candidate is the clause set alone; the
    checks run modulo the circuit's constraints."""
    ts = to_transition_system(model, property_index)

    s_init = Solver()
    ts.load(s_init)
    for lit in ts.init_cube():
        s_init.add_clause([lit])
    for cube in invariant:
        if s_init.solve(list(cube)) is not UNSAT:
            return False, f"initiation fails for clause over {sorted(set(cube))}"

    s_step = Solver()
    ts.load(s_step)
    for cube in invariant:
        s_step.add_clause([l ^ 1 for l in cube])
    if s_step.solve([ts.cur(ts.bad_lit)]) is not UNSAT:
        return False, "invariant does not exclude the bad states"
    for cube in invariant:
        if s_step.solve(ts.prime_cube(cube)) is not UNSAT:
            return False, f"consecution fails for clause over {sorted(set(cube))}"
    return True, "ok"


def certify(result: CheckResult, model: AigerModel) -> tuple[bool, str]:
    """Validate a solved verdict against its own evidence."""
    if result.status == "safe":
        assert result.invariant is not None
        return certify_safe(model, result.property_index, result.invariant)
    if result.status == "unsafe":
        assert result.trace is not None
        return replay_trace(model, result.trace, result.property_index)
    return False, f"verdict {result.status} carries no evidence"
