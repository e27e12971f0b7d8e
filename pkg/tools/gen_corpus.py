"""Generate the bundled benchmark circuits.

Writes every instance in both AIGER encodings (NAME.aag and NAME.aig) so
encoding round-trip checks have independently produced twins.  All circuits
are built with the small netlist builder below; emission is deterministic,
so regeneration is byte-stable.

Usage: python3 tools/gen_corpus.py [outdir]   (default: corpus/ next to repo root)
"""

from __future__ import annotations

import sys
from pathlib import Path

X = "x"  # latch reset marker for an unconstrained initial value


class Circuit:
    """Tiny and-inverter netlist builder.

    Variables are allocated inputs first, then latches, then AND gates in
    creation order, which keeps both encodings' numbering constraints
    satisfied without renumbering (binary requires contiguous gate
    variables and operands below the gate variable).
    """

    def __init__(self) -> None:
        self._inputs: list[int] = []
        self._latches: list[list] = []  # [var, next_lit, reset]
        self._ands: list[tuple[int, int, int]] = []
        self._cache: dict[tuple[int, int], int] = {}
        self._nv = 0
        self.outputs: list[int] = []
        self.bads: list[int] = []
        self.constraints: list[int] = []

    def input(self) -> int:
        assert not self._ands, "declare inputs before any gate"
        self._nv += 1
        self._inputs.append(self._nv)
        return 2 * self._nv

    def latch(self, reset=0) -> int:
        assert not self._ands, "declare latches before any gate"
        self._nv += 1
        self._latches.append([self._nv, None, reset])
        return 2 * self._nv

    def set_next(self, lit: int, nxt: int) -> None:
        for row in self._latches:
            if row[0] == lit >> 1:
                row[1] = nxt
                return
        raise ValueError(f"literal {lit} is not a latch")

    def and_(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        if a == 0 or a == b ^ 1:
            return 0
        if a == 1 or a == b:
            return b
        key = (a, b)
        got = self._cache.get(key)
        if got is None:
            self._nv += 1
            got = 2 * self._nv
            self._ands.append((got, b, a))  # rhs0 >= rhs1 as emitted
            self._cache[key] = got
        return got

    def or_(self, a: int, b: int) -> int:
        return self.and_(a ^ 1, b ^ 1) ^ 1

    def xor_(self, a: int, b: int) -> int:
        return self.or_(self.and_(a, b ^ 1), self.and_(a ^ 1, b))

    def mux(self, c: int, t: int, e: int) -> int:
        return self.or_(self.and_(c, t), self.and_(c ^ 1, e))

    def all_(self, lits: list[int]) -> int:
        acc = 1
        for l in lits:
            acc = self.and_(acc, l)
        return acc

    def eq_const(self, bits: list[int], value: int) -> int:
        return self.all_([b if (value >> i) & 1 else b ^ 1 for i, b in enumerate(bits)])

    def inc(self, bits: list[int]) -> list[int]:
        """Combinational increment (wraps); returns the summed bits."""
        carry, out = 1, []
        for b in bits:
            out.append(self.xor_(b, carry))
            carry = self.and_(b, carry)
        return out

    # -- emission ----------------------------------------------------------

    def _counts(self) -> tuple[int, int, int, int, int, int]:
        return (
            self._nv,
            len(self._inputs),
            len(self._latches),
            len(self.outputs),
            len(self._ands),
            len(self.bads),
        )

    def _reset_field(self, var: int, reset) -> str | None:
        if reset == 0:
            return None
        return str(2 * var) if reset == X else str(int(reset))

    def to_aag(self) -> str:
        m, i, l, o, a, b = self._counts()
        head = f"aag {m} {i} {l} {o} {a}"
        if b or self.constraints:
            head += f" {b}"
            if self.constraints:
                head += f" {len(self.constraints)}"
        lines = [head]
        lines += [str(2 * v) for v in self._inputs]
        for var, nxt, reset in self._latches:
            assert nxt is not None, f"latch {var} has no next function"
            field = self._reset_field(var, reset)
            lines.append(f"{2*var} {nxt}" + (f" {field}" if field else ""))
        lines += [str(x) for x in self.outputs]
        lines += [str(x) for x in self.bads]
        lines += [str(x) for x in self.constraints]
        lines += [f"{g[0]} {g[1]} {g[2]}" for g in self._ands]
        return "\n".join(lines) + "\n"

    def to_aig(self) -> bytes:
        m, i, l, o, a, b = self._counts()
        head = f"aig {m} {i} {l} {o} {a}"
        if b or self.constraints:
            head += f" {b}"
            if self.constraints:
                head += f" {len(self.constraints)}"
        lines = [head]
        for var, nxt, reset in self._latches:
            field = self._reset_field(var, reset)
            lines.append(f"{nxt}" + (f" {field}" if field else ""))
        lines += [str(x) for x in self.outputs]
        lines += [str(x) for x in self.bads]
        lines += [str(x) for x in self.constraints]
        out = bytearray(("\n".join(lines) + "\n").encode("ascii"))
        for lhs, rhs0, rhs1 in self._ands:
            for delta in (lhs - rhs0, rhs0 - rhs1):
                while delta >= 0x80:
                    out.append((delta & 0x7F) | 0x80)
                    delta >>= 7
                out.append(delta)
        return bytes(out)


# -- instance families -----------------------------------------------------


def counter_wrap(n: int) -> Circuit:
    """n-bit wrapping counter; bad = all ones.  Unsafe at depth 2^n - 1."""
    c = Circuit()
    bits = [c.latch() for _ in range(n)]
    for b, nx in zip(bits, c.inc(bits)):
        c.set_next(b, nx)
    c.bads.append(c.all_(bits))
    return c


def counter_mod(n: int) -> Circuit:
    """Counter that wraps two short of the range top; bad = all ones.  Safe."""
    c = Circuit()
    bits = [c.latch() for _ in range(n)]
    wrap = c.eq_const(bits, 2**n - 3)
    for b, nx in zip(bits, c.inc(bits)):
        c.set_next(b, c.and_(wrap ^ 1, nx))
    c.bads.append(c.all_(bits))
    return c


def counter_sat(n: int) -> Circuit:
    """Counter that saturates at 2^n - 2; bad = all ones.  Safe."""
    c = Circuit()
    bits = [c.latch() for _ in range(n)]
    hold = c.eq_const(bits, 2**n - 2)
    for b, nx in zip(bits, c.inc(bits)):
        c.set_next(b, c.mux(hold, b, nx))
    c.bads.append(c.all_(bits))
    return c


def ring(n: int) -> Circuit:
    """One-hot rotating ring; bad = two adjacent stages set.  Safe."""
    c = Circuit()
    bits = [c.latch(reset=1 if i == 0 else 0) for i in range(n)]
    for i, b in enumerate(bits):
        c.set_next(b, bits[(i - 1) % n])
    c.bads.append(c.and_(bits[0], bits[1]))
    return c


def shift_unsafe(n: int) -> Circuit:
    """Shift register fed by a free input; bad = all ones.  Unsafe at depth n."""
    c = Circuit()
    inp = c.input()
    bits = [c.latch() for _ in range(n)]
    c.set_next(bits[0], inp)
    for prev, b in zip(bits, bits[1:]):
        c.set_next(b, prev)
    c.bads.append(c.all_(bits))
    return c


def shift_mirror(n: int) -> Circuit:
    """Two n-stage shift registers fed by the same free input; bad = the end
    taps disagree.  Safe; the invariant needs stagewise equality."""
    c = Circuit()
    inp = c.input()
    sa = [c.latch() for _ in range(n)]
    sb = [c.latch() for _ in range(n)]
    for regs in (sa, sb):
        c.set_next(regs[0], inp)
        for prev, b in zip(regs, regs[1:]):
            c.set_next(b, prev)
    c.bads.append(c.xor_(sa[-1], sb[-1]))
    return c


def mutex(broken: bool) -> Circuit:
    """Two requesters gated by an alternating turn bit; bad = both granted.
    The broken variant gives both requesters the same turn phase."""
    c = Circuit()
    r0, r1 = c.input(), c.input()
    turn = c.latch(reset=1)
    g0 = c.latch()
    g1 = c.latch()
    c.set_next(turn, turn ^ 1)
    c.set_next(g0, c.and_(r0, turn))
    c.set_next(g1, c.and_(r1, turn if broken else turn ^ 1))
    c.bads.append(c.and_(g0, g1))
    return c


def guard_counter(n: int) -> Circuit:
    """n-bit counter with an enable input that wraps 16 short of the range
    top; bad = all ones.  Safe: the top 16 values are unreachable, and the
    whole zone collapses to one clause over the upper n - 4 bits."""
    c = Circuit()
    en = c.input()
    bits = [c.latch() for _ in range(n)]
    wrap = c.eq_const(bits, 2**n - 17)
    for b, nx in zip(bits, c.inc(bits)):
        c.set_next(b, c.mux(en, c.and_(wrap ^ 1, nx), b))
    c.bads.append(c.all_(bits))
    return c


def bad_false() -> Circuit:
    """Free-running counter with a constant-false bad.  Safe, empty invariant."""
    c = Circuit()
    bits = [c.latch() for _ in range(2)]
    for b, nx in zip(bits, c.inc(bits)):
        c.set_next(b, nx)
    c.bads.append(0)
    return c


def bad_true() -> Circuit:
    """Constant-true bad: failed before any transition."""
    c = Circuit()
    b = c.latch()
    c.set_next(b, b)
    c.bads.append(1)
    return c


def bad_init() -> Circuit:
    """Bad holds exactly in the reset state; zero-length counterexample."""
    c = Circuit()
    bits = [c.latch() for _ in range(2)]
    for b, nx in zip(bits, c.inc(bits)):
        c.set_next(b, nx)
    c.bads.append(c.and_(bits[0] ^ 1, bits[1] ^ 1))
    return c


def xreset_safe() -> Circuit:
    """One latch starts unconstrained, another holds 1 forever; bad needs the
    held latch low, so the verdict cannot depend on the free initial value."""
    c = Circuit()
    a = c.latch(reset=X)
    hi = c.latch(reset=1)
    c.set_next(a, a)
    c.set_next(hi, hi)
    c.bads.append(c.and_(a, hi ^ 1))
    return c


def xreset_unsafe() -> Circuit:
    """Unconstrained initial latch drives bad directly: unsafe only if the
    initial value is treated as free (reset-to-zero would miss it)."""
    c = Circuit()
    a = c.latch(reset=X)
    c.set_next(a, a)
    c.bads.append(a)
    return c


def constrained(force_on: bool) -> Circuit:
    """2-bit counter stepped by an enable input under an invariant constraint
    pinning the enable.  Forced on: counts to bad.  Forced off: frozen at 0,
    safe only because of the constraint."""
    c = Circuit()
    en = c.input()
    bits = [c.latch() for _ in range(2)]
    for b, nx in zip(bits, c.inc(bits)):
        c.set_next(b, c.mux(en, nx, b))
    c.bads.append(c.all_(bits))
    c.constraints.append(en if force_on else en ^ 1)
    return c


def multi_prop() -> Circuit:
    """Two properties: index 0 (counter reaches top) fails, index 1 never."""
    c = Circuit()
    bits = [c.latch() for _ in range(2)]
    for b, nx in zip(bits, c.inc(bits)):
        c.set_next(b, nx)
    c.bads.append(c.all_(bits))
    c.bads.append(0)
    return c


def legacy_out() -> Circuit:
    """Pre-1.9 style file: the property is an output, no bad section."""
    c = Circuit()
    bits = [c.latch() for _ in range(2)]
    for b, nx in zip(bits, c.inc(bits)):
        c.set_next(b, nx)
    c.outputs.append(c.all_(bits))
    return c


def instances() -> list[tuple[str, Circuit]]:
    out: list[tuple[str, Circuit]] = []
    for n in range(3, 7):
        out.append((f"cnt_unsafe_n{n}", counter_wrap(n)))
        out.append((f"cnt_mod_safe_n{n}", counter_mod(n)))
        out.append((f"cnt_sat_safe_n{n}", counter_sat(n)))
    for n in (6, 8, 10):
        out.append((f"ring_safe_n{n:02d}", ring(n)))
    for n in (4, 5, 6):
        out.append((f"shift_unsafe_n{n}", shift_unsafe(n)))
        out.append((f"mirror_safe_n{n}", shift_mirror(n)))
    out.append(("mutex_safe", mutex(broken=False)))
    out.append(("mutex_unsafe", mutex(broken=True)))
    for n in range(8, 15):
        out.append((f"guard_safe_n{n:02d}", guard_counter(n)))
    out.append(("edge_badfalse_safe", bad_false()))
    out.append(("edge_badtrue_unsafe", bad_true()))
    out.append(("edge_badinit_unsafe", bad_init()))
    out.append(("edge_xreset_safe", xreset_safe()))
    out.append(("edge_xreset_unsafe", xreset_unsafe()))
    out.append(("edge_constr_unsafe", constrained(force_on=True)))
    out.append(("edge_constr_safe", constrained(force_on=False)))
    out.append(("edge_multiprop", multi_prop()))
    out.append(("edge_legacyout_unsafe", legacy_out()))
    return sorted(out)


def main(argv: list[str]) -> int:
    outdir = Path(argv[1]) if len(argv) > 1 else Path(__file__).resolve().parent.parent / "corpus"
    outdir.mkdir(parents=True, exist_ok=True)
    rows = instances()
    for name, circ in rows:
        (outdir / f"{name}.aag").write_text(circ.to_aag())
        (outdir / f"{name}.aig").write_bytes(circ.to_aig())
    print(f"wrote {len(rows)} instances ({2 * len(rows)} files) to {outdir}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
