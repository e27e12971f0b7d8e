"""Transition-system view of an and-inverter circuit for the checker.

The circuit is lowered to CNF twice: a current-step copy and a next-step
copy.  Solver variable v mirrors circuit variable v; the next-step copy of
variable v is M + v (M = max_var), so a packed current-copy literal maps to
its next-copy twin by adding 2M.  One extra variable holds constant true.

State cubes are tuples of current-copy latch literals sorted by variable.
Invariant constraints are installed as permanent unit clauses in both
copies, so every transition query requires them on the pre- and post-state
side; reachability is relative to constraint-satisfying runs throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .aiger import AigerModel, lit_sign, lit_var
from .sat import Solver


class PropertyError(Exception):
    """Requested property index does not exist in the circuit."""


@dataclass
class TransitionSystem:
    model: AigerModel
    property_index: int
    bad_lit: int
    latch_vars: list[int]
    input_vars: list[int]
    init_value: dict[int, int]  # latch var -> reset value; X latches absent
    true_var: int

    @property
    def offset(self) -> int:
        """Packed-literal distance between the two circuit copies."""
        return 2 * self.model.max_var

    def cur(self, lit: int) -> int:
        """Solver literal for circuit literal `lit` in the current copy."""
        if lit_var(lit) == 0:
            return 2 * self.true_var + (lit ^ 1)  # 1 -> true_var, 0 -> negation
        return lit

    def nxt(self, lit: int) -> int:
        """Solver literal for circuit literal `lit` in the next-step copy."""
        if lit_var(lit) == 0:
            return 2 * self.true_var + (lit ^ 1)
        return lit + self.offset

    def prime_cube(self, cube: tuple[int, ...]) -> list[int]:
        """Map a cube over current-copy latch literals to the next copy."""
        off = self.offset
        return [lit + off for lit in cube]

    def init_cube(self) -> list[int]:
        """Current-copy literals forced by the initial states."""
        return [2 * v + (1 - val) for v, val in sorted(self.init_value.items())]

    def intersects_init(self, cube: tuple[int, ...]) -> bool:
        """True when some initial state satisfies the cube.  Exact for any
        cube: an initial state exists iff no literal contradicts a defined
        reset value (X-reset latches are unconstrained)."""
        for lit in cube:
            want = self.init_value.get(lit >> 1)
            if want is not None and (1 - (lit & 1)) != want:
                return False
        return True

    def load(self, solver: Solver) -> None:
        """Install both circuit copies and the constraint units."""
        m = self.model
        solver.ensure_vars(self.true_var)
        solver.add_clause([2 * self.true_var])
        for copy in (self.cur, self.nxt):
            for lhs, rhs0, rhs1 in m.ands:
                out, a, b = copy(lhs), copy(rhs0), copy(rhs1)
                solver.add_clause([out ^ 1, a])
                solver.add_clause([out ^ 1, b])
                solver.add_clause([out, a ^ 1, b ^ 1])
        for la in m.latches:
            # Next-copy latch value is the current-copy next-state function.
            nv = self.nxt(la.lit)
            fn = self.cur(la.next)
            solver.add_clause([nv ^ 1, fn])
            solver.add_clause([nv, fn ^ 1])
        for c in m.constraints:
            solver.add_clause([self.cur(c)])
            solver.add_clause([self.nxt(c)])


def to_transition_system(model: AigerModel, property_index: int = 0) -> TransitionSystem:
    """Select a safety property and build the solver-facing system view."""
    props = model.properties()
    if not 0 <= property_index < len(props):
        raise PropertyError(
            f"property index {property_index} out of range "
            f"(circuit has {len(props)} checkable properties)"
        )
    init_value = {
        lit_var(la.lit): la.reset for la in model.latches if la.reset is not None
    }
    return TransitionSystem(
        model=model,
        property_index=property_index,
        bad_lit=props[property_index],
        latch_vars=[lit_var(la.lit) for la in model.latches],
        input_vars=[lit_var(l) for l in model.inputs],
        init_value=init_value,
        true_var=2 * model.max_var + 1,
    )


def simulate_step(
    model: AigerModel, latch_vals: dict[int, int], input_vals: dict[int, int]
) -> tuple[dict[int, int], list[int], list[int]]:
    """Concretely evaluate one step of the circuit.

    Returns (next latch values, property values, constraint values).  Gate
    order is topological by construction (every AND output exceeds its
    operands), so a single pass suffices.  This route never touches the SAT
    solver; counterexample replay relies on that independence.
    """
    values: dict[int, int] = {0: 0}
    values.update(latch_vals)
    values.update(input_vals)

    def ev(lit: int) -> int:
        return values[lit_var(lit)] ^ lit_sign(lit)

    for lhs, rhs0, rhs1 in model.ands:
        values[lit_var(lhs)] = ev(rhs0) & ev(rhs1)
    nxt = {lit_var(la.lit): ev(la.next) for la in model.latches}
    props = [ev(p) for p in model.properties()]
    cons = [ev(c) for c in model.constraints]
    return nxt, props, cons
