"""AIGER 1.9 reader for and-inverter graph circuits.

Supports both the ASCII ("aag") and the binary ("aig") encoding, including
bad-state and invariant-constraint sections.  Justice and fairness sections
are rejected: this checker handles safety properties only.

Literals follow the AIGER convention: variable v is represented by the even
literal 2v, its negation by 2v+1.  Literal 0 is constant false, literal 1
constant true.
"""

from __future__ import annotations

from dataclasses import dataclass, field


FALSE_LIT = 0
TRUE_LIT = 1


def lit_var(lit: int) -> int:
    """Variable index of a literal."""
    return lit >> 1


def lit_neg(lit: int) -> int:
    """Negation of a literal (involution: lit_neg(lit_neg(l)) == l)."""
    return lit ^ 1


def lit_sign(lit: int) -> int:
    """1 if the literal is negated, else 0."""
    return lit & 1


class AigerError(Exception):
    """Malformed AIGER input; message carries the file position."""


@dataclass(frozen=True)
class Latch:
    """State-holding element: current-state literal, next-state function, reset.

    reset is 0, 1, or None; None means the latch starts unconstrained (the
    AIGER file encodes that as a reset equal to the latch's own literal).
    """

    lit: int
    next: int
    reset: int | None


@dataclass
class AigerModel:
    """Parsed and-inverter graph.

    Invariants checked at parse time: input, latch, and AND-output variables
    are pairwise disjoint; every AND left-hand side is even, defined exactly
    once, and strictly greater than both operands (rhs0 >= rhs1 after
    normalization); every referenced literal is in range and refers to a
    defined variable or a constant.
    """

    max_var: int
    inputs: list[int] = field(default_factory=list)
    latches: list[Latch] = field(default_factory=list)
    outputs: list[int] = field(default_factory=list)
    bad: list[int] = field(default_factory=list)
    constraints: list[int] = field(default_factory=list)
    ands: list[tuple[int, int, int]] = field(default_factory=list)
    symbols: list[tuple[str, str]] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)

    def properties(self) -> list[int]:
        """Bad-state literals to check: the bad section, or (legacy files
        without one) the outputs."""
        return self.bad if self.bad else self.outputs

    def num_inputs(self) -> int:
        return len(self.inputs)

    def num_latches(self) -> int:
        return len(self.latches)


def parse_aiger_file(path: str) -> AigerModel:
    with open(path, "rb") as fh:
        return parse_aiger(fh.read())


def parse_aiger(data: bytes) -> AigerModel:
    """Parse AIGER bytes, auto-detecting the ASCII or binary encoding."""
    if data.startswith(b"aag "):
        return _parse_ascii(data)
    if data.startswith(b"aig "):
        return _parse_binary(data)
    raise AigerError("not an AIGER file: header must start with 'aag' or 'aig'")


def _parse_header(line: str, lineno: int) -> tuple[int, int, int, int, int, int, int]:
    fields = line.split()
    if len(fields) < 6 or len(fields) > 10:
        raise AigerError(f"line {lineno}: header needs 'M I L O A [B C J F]'")
    try:
        nums = [int(f) for f in fields[1:]]
    except ValueError as exc:
        raise AigerError(f"line {lineno}: non-numeric header field: {exc}") from None
    if any(n < 0 for n in nums):
        raise AigerError(f"line {lineno}: negative header field")
    m, i, l, o, a = nums[:5]
    b = nums[5] if len(nums) > 5 else 0
    c = nums[6] if len(nums) > 6 else 0
    j = nums[7] if len(nums) > 7 else 0
    f = nums[8] if len(nums) > 8 else 0
    if j or f:
        raise AigerError(
            f"line {lineno}: justice/fairness sections are not supported "
            "(safety properties only)"
        )
    return m, i, l, o, a, b, c


def _check_lit(lit: int, max_var: int, where: str) -> int:
    if lit < 0 or lit > 2 * max_var + 1:
        raise AigerError(f"{where}: literal {lit} out of range (max_var {max_var})")
    return lit


def _finish(model: AigerModel) -> AigerModel:
    """Cross-checks shared by both encodings; runs after all sections load."""
    defined: dict[int, str] = {}
    for lit in model.inputs:
        if lit_sign(lit) or lit < 2:
            raise AigerError(f"input literal {lit} must be a positive even literal")
        v = lit_var(lit)
        if v in defined:
            raise AigerError(f"variable {v} defined twice ({defined[v]} and input)")
        defined[v] = "input"
    for la in model.latches:
        if lit_sign(la.lit) or la.lit < 2:
            raise AigerError(f"latch literal {la.lit} must be a positive even literal")
        v = lit_var(la.lit)
        if v in defined:
            raise AigerError(f"variable {v} defined twice ({defined[v]} and latch)")
        defined[v] = "latch"
    for lhs, rhs0, rhs1 in model.ands:
        if lit_sign(lhs):
            raise AigerError(f"AND output {lhs} must be even")
        v = lit_var(lhs)
        if v in defined:
            raise AigerError(f"variable {v} defined twice ({defined[v]} and AND)")
        defined[v] = "and"
        if lhs <= rhs0 or rhs0 < rhs1:
            raise AigerError(
                f"AND ordering violation: requires lhs > rhs0 >= rhs1, "
                f"got ({lhs}, {rhs0}, {rhs1})"
            )
    def check_ref(lit: int, where: str) -> None:
        _check_lit(lit, model.max_var, where)
        v = lit_var(lit)
        if v != 0 and v not in defined:
            raise AigerError(f"{where}: literal {lit} references undefined variable {v}")
    for _, rhs0, rhs1 in model.ands:
        check_ref(rhs0, "AND operand")
        check_ref(rhs1, "AND operand")
    for la in model.latches:
        check_ref(la.next, "latch next-state")
    for lit in model.outputs:
        check_ref(lit, "output")
    for lit in model.bad:
        check_ref(lit, "bad")
    for lit in model.constraints:
        check_ref(lit, "constraint")
    return model


def _parse_ascii(data: bytes) -> AigerModel:
    lines = data.decode("latin-1").splitlines()
    if not lines:
        raise AigerError("empty file")
    m, ni, nl, no, na, nbad, nc = _parse_header(lines[0], 1)
    model = AigerModel(max_var=m)
    pos = 1

    def take(n: int, what: str) -> list[str]:
        nonlocal pos
        if pos + n > len(lines):
            raise AigerError(f"line {len(lines)}: truncated {what} section")
        out = lines[pos : pos + n]
        pos += n
        return out

    def ints(line: str, lineno: int, want: tuple[int, ...]) -> list[int]:
        try:
            vals = [int(t) for t in line.split()]
        except ValueError:
            raise AigerError(f"line {lineno}: expected integers, got {line!r}") from None
        if len(vals) not in want:
            raise AigerError(f"line {lineno}: expected {want} fields, got {len(vals)}")
        return vals

    for k, line in enumerate(take(ni, "input")):
        (lit,) = ints(line, pos - ni + k + 1, (1,))
        model.inputs.append(_check_lit(lit, m, f"line {pos - ni + k + 1}"))
    for k, line in enumerate(take(nl, "latch")):
        lineno = pos - nl + k + 1
        vals = ints(line, lineno, (2, 3))
        cur = _check_lit(vals[0], m, f"line {lineno}")
        nxt = _check_lit(vals[1], m, f"line {lineno}")
        reset: int | None = 0
        if len(vals) == 3:
            if vals[2] == cur:
                reset = None
            elif vals[2] in (0, 1):
                reset = vals[2]
            else:
                raise AigerError(
                    f"line {lineno}: latch reset must be 0, 1, or the latch literal"
                )
        model.latches.append(Latch(cur, nxt, reset))
    for k, line in enumerate(take(no, "output")):
        (lit,) = ints(line, pos - no + k + 1, (1,))
        model.outputs.append(_check_lit(lit, m, f"line {pos - no + k + 1}"))
    for k, line in enumerate(take(nbad, "bad")):
        (lit,) = ints(line, pos - nbad + k + 1, (1,))
        model.bad.append(_check_lit(lit, m, f"line {pos - nbad + k + 1}"))
    for k, line in enumerate(take(nc, "constraint")):
        (lit,) = ints(line, pos - nc + k + 1, (1,))
        model.constraints.append(_check_lit(lit, m, f"line {pos - nc + k + 1}"))
    for k, line in enumerate(take(na, "AND")):
        lineno = pos - na + k + 1
        lhs, rhs0, rhs1 = ints(line, lineno, (3,))
        for x in (lhs, rhs0, rhs1):
            _check_lit(x, m, f"line {lineno}")
        if rhs0 < rhs1:
            rhs0, rhs1 = rhs1, rhs0
        model.ands.append((lhs, rhs0, rhs1))
    _parse_trailer(lines[pos:], model)
    return _finish(model)


def _parse_trailer(lines: list[str], model: AigerModel) -> None:
    """Symbol table and comment section, common to both encodings."""
    in_comments = False
    for line in lines:
        if in_comments:
            model.comments.append(line)
        elif line == "c":
            in_comments = True
        elif line and line[0] in "ilobc" and " " in line:
            tag, name = line.split(" ", 1)
            if len(tag) < 2 or not tag[1:].isdigit():
                raise AigerError(f"malformed symbol entry {line!r}")
            model.symbols.append((tag, name))
        elif line.strip() == "":
            continue
        else:
            raise AigerError(f"unexpected trailer line {line!r}")


def _parse_binary(data: bytes) -> AigerModel:
    nl_at = data.find(b"\n")
    if nl_at < 0:
        raise AigerError("missing newline after header")
    m, ni, nlat, no, na, nbad, nc = _parse_header(data[:nl_at].decode("latin-1"), 1)
    if m != ni + nlat + na:
        raise AigerError(
            f"binary format requires M = I + L + A, got {m} != {ni}+{nlat}+{na}"
        )
    model = AigerModel(max_var=m)
    model.inputs = [2 * (v + 1) for v in range(ni)]
    pos = nl_at + 1

    def take_line(what: str) -> str:
        nonlocal pos
        end = data.find(b"\n", pos)
        if end < 0:
            raise AigerError(f"byte {pos}: truncated {what} line")
        line = data[pos:end].decode("latin-1")
        pos = end + 1
        return line

    for k in range(nlat):
        cur = 2 * (ni + k + 1)
        fields = take_line("latch").split()
        if len(fields) not in (1, 2):
            raise AigerError(f"latch line {k}: expected 'next [reset]'")
        try:
            vals = [int(f) for f in fields]
        except ValueError:
            raise AigerError(f"latch line {k}: non-numeric field") from None
        nxt = _check_lit(vals[0], m, f"latch line {k}")
        reset: int | None = 0
        if len(vals) == 2:
            if vals[1] == cur:
                reset = None
            elif vals[1] in (0, 1):
                reset = vals[1]
            else:
                raise AigerError(f"latch line {k}: bad reset value {vals[1]}")
        model.latches.append(Latch(cur, nxt, reset))
    for k in range(no):
        model.outputs.append(_check_lit(int(take_line("output")), m, f"output {k}"))
    for k in range(nbad):
        model.bad.append(_check_lit(int(take_line("bad")), m, f"bad {k}"))
    for k in range(nc):
        model.constraints.append(
            _check_lit(int(take_line("constraint")), m, f"constraint {k}")
        )

    # AND gates: left-hand sides are implicit consecutive even literals; the
    # file stores delta0 = lhs - rhs0 and delta1 = rhs0 - rhs1 as 7-bit
    # little-endian varints (high bit = continuation).
    def take_varint(where: str) -> int:
        nonlocal pos
        x = 0
        shift = 0
        while True:
            if pos >= len(data):
                raise AigerError(f"byte {pos}: truncated varint in {where}")
            byte = data[pos]
            pos += 1
            x |= (byte & 0x7F) << shift
            if not byte & 0x80:
                return x
            shift += 7

    for k in range(na):
        lhs = 2 * (ni + nlat + k + 1)
        at = pos
        delta0 = take_varint(f"AND {k}")
        delta1 = take_varint(f"AND {k}")
        rhs0 = lhs - delta0
        rhs1 = rhs0 - delta1
        if delta0 == 0 or rhs1 < 0:
            raise AigerError(
                f"byte {at}: AND {k} deltas ({delta0}, {delta1}) violate "
                "lhs > rhs0 >= rhs1 >= 0"
            )
        model.ands.append((lhs, rhs0, rhs1))

    _parse_trailer(data[pos:].decode("latin-1").splitlines(), model)
    return _finish(model)
