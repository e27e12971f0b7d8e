"""Independent reference results for the test suite.

Everything here is deliberately package-free: a minimal ASCII AIGER reader
and an explicit-state reachability search, sharing no code with the checker
under test.  The search enumerates all latch/input assignments bit-parallel
with numpy and is capped at 2**16 combinations, which covers the whole
bundled corpus.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_COMBOS = 1 << 16


@dataclass
class FlatAig:
    max_var: int
    inputs: list[int] = field(default_factory=list)
    latches: list[tuple[int, int, int | None]] = field(default_factory=list)
    outputs: list[int] = field(default_factory=list)
    bad: list[int] = field(default_factory=list)
    constraints: list[int] = field(default_factory=list)
    ands: list[tuple[int, int, int]] = field(default_factory=list)

    def properties(self) -> list[int]:
        return self.bad if self.bad else self.outputs


def read_aag(path: str) -> FlatAig:
    """Minimal ASCII AIGER reader (header counts only, symbols ignored)."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    parts = lines[0].split()
    assert parts[0] == "aag", "oracle reads the ASCII encoding only"
    m, i, l, o, a = (int(x) for x in parts[1:6])
    b = int(parts[6]) if len(parts) > 6 else 0
    c = int(parts[7]) if len(parts) > 7 else 0
    pos = 1
    flat = FlatAig(max_var=m)
    for _ in range(i):
        flat.inputs.append(int(lines[pos]))
        pos += 1
    for _ in range(l):
        fields = [int(x) for x in lines[pos].split()]
        pos += 1
        lit, nxt = fields[0], fields[1]
        reset: int | None = fields[2] if len(fields) > 2 else 0
        if reset == lit:
            reset = None
        flat.latches.append((lit, nxt, reset))
    for section, count in ((flat.outputs, o), (flat.bad, b), (flat.constraints, c)):
        for _ in range(count):
            section.append(int(lines[pos]))
            pos += 1
    for _ in range(a):
        lhs, r0, r1 = (int(x) for x in lines[pos].split())
        pos += 1
        flat.ands.append((lhs, r0, r1))
    return flat


def _evaluate(flat: FlatAig) -> dict[int, np.ndarray]:
    """Truth table of every circuit variable over all latch/input combos.

    Combo index bit j is latch j's value; bit L + j is input j's value."""
    nl, ni = len(flat.latches), len(flat.inputs)
    combos = 1 << (nl + ni)
    assert combos <= MAX_COMBOS, "state space too large for the explicit oracle"
    idx = np.arange(combos, dtype=np.uint32)
    val: dict[int, np.ndarray] = {0: np.zeros(combos, dtype=bool)}
    for j, (lit, _, _) in enumerate(flat.latches):
        val[lit >> 1] = (idx >> j) & 1 != 0
    for j, lit in enumerate(flat.inputs):
        val[lit >> 1] = (idx >> (nl + j)) & 1 != 0
    for lhs, r0, r1 in flat.ands:
        val[lhs >> 1] = (val[r0 >> 1] ^ bool(r0 & 1)) & (val[r1 >> 1] ^ bool(r1 & 1))
    return val


def reachability(flat: FlatAig, property_index: int = 0) -> tuple[str, int | None]:
    """Exhaustive BFS verdict for one property.

    Returns ("unsafe", depth) with the minimum number of transitions to a
    constraint-satisfying bad combo, or ("safe", None).  Runs that violate a
    constraint at any step, including the failing one, do not count."""
    nl, ni = len(flat.latches), len(flat.inputs)
    val = _evaluate(flat)

    def of(lit: int) -> np.ndarray:
        return val[lit >> 1] ^ bool(lit & 1)

    bad = of(flat.properties()[property_index])
    cons = np.ones(1 << (nl + ni), dtype=bool)
    for cl in flat.constraints:
        cons &= of(cl)
    nxt = np.zeros(1 << (nl + ni), dtype=np.uint32)
    for j, (_, nexp, _) in enumerate(flat.latches):
        nxt |= of(nexp).astype(np.uint32) << j

    inits = np.array([0], dtype=np.uint32)
    for j, (_, _, reset) in enumerate(flat.latches):
        if reset is None:
            inits = np.concatenate([inits, inits | (1 << j)])
        elif reset:
            inits |= 1 << j
    input_shift = (np.arange(1 << ni, dtype=np.uint32) << nl)[None, :]

    seen = np.zeros(1 << nl, dtype=bool)
    seen[inits] = True
    frontier = np.unique(inits)
    depth = 0
    while frontier.size:
        combos = (frontier[:, None] | input_shift).ravel()
        ok = combos[cons[combos]]
        if bad[ok].any():
            return "unsafe", depth
        succ = np.unique(nxt[ok])
        succ = succ[~seen[succ]]
        seen[succ] = True
        frontier = succ
        depth += 1
    return "safe", None
