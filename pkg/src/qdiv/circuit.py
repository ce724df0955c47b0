"""Gate alphabet, circuit container and register bookkeeping.

Qubit 0 is the least significant bit of every register, and a basis index is
``sum(bit_i << i)``.  Circuits are immutable: :func:`append` returns a new
circuit and builders assemble gate lists before constructing one circuit.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from operator import itemgetter
from typing import Iterable, Sequence

from .errors import InvalidGate, LevelViolation, OperandOutOfRange


class GateKind(enum.Enum):
    X = "x"
    CNOT = "cx"
    TOFFOLI = "ccx"
    PERES = "peres"
    H = "h"
    T = "t"
    TDG = "tdg"
    S = "s"
    SDG = "sdg"

    # members are singletons; Enum's default hash is slow in hot loops
    __hash__ = object.__hash__

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @property
    def is_permutation(self) -> bool:
        return self in PERMUTATION_KINDS


_ARITY = {
    GateKind.X: 1,
    GateKind.H: 1,
    GateKind.T: 1,
    GateKind.TDG: 1,
    GateKind.S: 1,
    GateKind.SDG: 1,
    GateKind.CNOT: 2,
    GateKind.TOFFOLI: 3,
    GateKind.PERES: 3,
}

PERMUTATION_KINDS = frozenset(
    {GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.PERES}
)
T_KINDS = frozenset({GateKind.T, GateKind.TDG})
TOFFOLI_LIKE = frozenset({GateKind.TOFFOLI, GateKind.PERES})


class Level(enum.IntEnum):
    """Abstraction level; a larger value admits more gate kinds."""

    CLIFFORD_T = 0
    TOFFOLI_CNOT = 1
    LOGICAL = 2

    @classmethod
    def parse(cls, name: "str | Level") -> "Level":
        if isinstance(name, Level):
            return name
        key = name.strip().lower().replace("+", "").replace("_", "").replace("-", "")
        try:
            return _LEVEL_NAMES[key]
        except KeyError:
            raise ValueError(
                f"unknown level {name!r}; expected one of logical, toffoli, cliffordt"
            ) from None


_LEVEL_NAMES = {
    "logical": Level.LOGICAL,
    "toffoli": Level.TOFFOLI_CNOT,
    "toffolicnot": Level.TOFFOLI_CNOT,
    "cliffordt": Level.CLIFFORD_T,
}

_FORBIDDEN = {
    Level.LOGICAL: frozenset(),
    Level.TOFFOLI_CNOT: frozenset({GateKind.PERES}),
    Level.CLIFFORD_T: frozenset({GateKind.PERES, GateKind.TOFFOLI}),
}


class Gate(tuple):
    """One gate with operands ordered controls first, target last.

    Peres operands are ``(a, b, c)`` with action ``(a, b, c) -> (a, a^b, c^ab)``.
    Gates are immutable ``(kind, operands)`` pairs; circuits of 10^5+ gates
    are common, so construction stays cheap.
    """

    __slots__ = ()

    def __new__(cls, kind: GateKind, operands: Sequence[int]):
        kind = GateKind(kind)
        ops = tuple(int(q) for q in operands)
        if len(ops) != kind.arity:
            raise InvalidGate(f"{kind.name} takes {kind.arity} operand(s), got {len(ops)}")
        if len(set(ops)) != len(ops):
            raise InvalidGate(f"repeated operand in {kind.name}{ops}")
        if min(ops) < 0:
            raise OperandOutOfRange(f"negative qubit index in {kind.name}{ops}")
        return tuple.__new__(cls, (kind, ops))

    kind = property(itemgetter(0))
    operands = property(itemgetter(1))

    def __repr__(self) -> str:
        return f"{self.kind.name}{self.operands}"

    def __getnewargs__(self):
        return tuple(self)

    @classmethod
    def _trusted(cls, kind: GateKind, operands: tuple[int, ...]) -> "Gate":
        # for passes that only remap operands of already-validated gates
        return tuple.__new__(cls, (kind, operands))


def X(q: int) -> Gate:
    return Gate(GateKind.X, (q,))


def CNOT(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (control, target))


def Toffoli(c0: int, c1: int, target: int) -> Gate:
    return Gate(GateKind.TOFFOLI, (c0, c1, target))


def Peres(a: int, b: int, c: int) -> Gate:
    return Gate(GateKind.PERES, (a, b, c))


def H(q: int) -> Gate:
    return Gate(GateKind.H, (q,))


def T(q: int) -> Gate:
    return Gate(GateKind.T, (q,))


def Tdg(q: int) -> Gate:
    return Gate(GateKind.TDG, (q,))


def S(q: int) -> Gate:
    return Gate(GateKind.S, (q,))


def Sdg(q: int) -> Gate:
    return Gate(GateKind.SDG, (q,))


def _check_gate(gate: Gate, width: int, level: Level) -> None:
    if max(gate.operands) >= width:
        raise OperandOutOfRange(f"{gate!r} does not fit a {width}-qubit circuit")
    if gate.kind in _FORBIDDEN[level]:
        raise LevelViolation(f"{gate.kind.name} is not allowed at level {level.name}")


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over a fixed number of qubits."""

    width: int
    gates: tuple[Gate, ...] = ()
    level: Level = Level.LOGICAL

    def __post_init__(self):
        if self.width < 0:
            raise ValueError("circuit width must be non-negative")
        object.__setattr__(self, "level", Level.parse(self.level))
        gates = tuple(self.gates)
        object.__setattr__(self, "gates", gates)
        for g in gates:
            _check_gate(g, self.width, self.level)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.width != other.width:
            raise ValueError("cannot concatenate circuits of different width")
        return Circuit(self.width, self.gates + other.gates, max(self.level, other.level))

    def histogram(self) -> dict[str, int]:
        counts = Counter(g.kind.name for g in self.gates)
        return dict(sorted(counts.items()))

    def count(self, *kinds: GateKind) -> int:
        wanted = set(kinds)
        return sum(1 for g in self.gates if g.kind in wanted)

    def t_count(self) -> int:
        return self.count(*T_KINDS)

    def toffoli_count(self) -> int:
        """Toffoli plus Peres gates; each lowers to seven T gates."""
        return self.count(*TOFFOLI_LIKE)

    def extended(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.width, self.gates + tuple(gates), self.level)

    @classmethod
    def _trusted(cls, width: int, gates: tuple[Gate, ...], level: Level) -> "Circuit":
        c = object.__new__(cls)
        object.__setattr__(c, "width", width)
        object.__setattr__(c, "gates", gates)
        object.__setattr__(c, "level", level)
        return c


def new_circuit(width: int, level: "Level | str" = Level.LOGICAL) -> Circuit:
    return Circuit(width, (), Level.parse(level))


def append(circuit: Circuit, gate: Gate) -> Circuit:
    """Return a copy of ``circuit`` with ``gate`` added at the end."""
    _check_gate(gate, circuit.width, circuit.level)
    return Circuit(circuit.width, circuit.gates + (gate,), circuit.level)


@dataclass
class RegisterLayout:
    """Physical qubit indices of the divider's logical registers.

    All lists are least-significant bit first.  ``window`` is the n-qubit
    partial remainder the next iteration subtracts from; ``retired`` holds the
    spare qubits already turned into quotient bits, in iteration order (so the
    first entry is the quotient MSB).
    """

    q_bits: tuple[int, ...]
    r_bits: tuple[int, ...]
    d_bits: tuple[int, ...]
    window: tuple[int, ...] = ()
    retired: tuple[int, ...] = ()
    quotient_bits: tuple[int, ...] = ()
    remainder_bits: tuple[int, ...] = ()

    def __post_init__(self):
        self.q_bits, self.r_bits, self.d_bits = (
            tuple(self.q_bits), tuple(self.r_bits), tuple(self.d_bits)
        )
        n = len(self.q_bits)
        if len(self.r_bits) != n or len(self.d_bits) != n:
            raise ValueError("Q, R and D registers must have the same length")
        every = self.q_bits + self.r_bits + self.d_bits
        if len(set(every)) != 3 * n:
            raise ValueError("Q, R and D registers must be pairwise disjoint")
        pool = set(every)
        for name in ("window", "retired", "quotient_bits", "remainder_bits"):
            bits = tuple(getattr(self, name))
            setattr(self, name, bits)
            if not set(bits) <= pool:
                raise ValueError(f"{name} uses qubits outside the Q/R/D registers")
        for name in ("quotient_bits", "remainder_bits"):
            if getattr(self, name) and len(getattr(self, name)) != n:
                raise ValueError(f"{name} must hold exactly {n} qubits")

    @property
    def n(self) -> int:
        return len(self.q_bits)

    @classmethod
    def standard(cls, n: int) -> "RegisterLayout":
        """Q on qubits ``0..n-1``, D on ``n..2n-1``, R on ``2n..3n-1``."""
        q = tuple(range(n))
        d = tuple(range(n, 2 * n))
        r = tuple(range(2 * n, 3 * n))
        return cls(q_bits=q, r_bits=r, d_bits=d)

    @property
    def complete(self) -> bool:
        return bool(self.quotient_bits) and bool(self.remainder_bits)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "dividend": list(self.q_bits),
            "divisor": list(self.d_bits),
            "ancilla": list(self.r_bits),
            "quotient": list(self.quotient_bits),
            "remainder": list(self.remainder_bits),
        }


def encode(layout_bits: Sequence[int], value: int) -> int:
    """Place ``value`` onto the given qubits of a basis index."""
    out = 0
    for i, q in enumerate(layout_bits):
        out |= ((value >> i) & 1) << q
    return out


def decode(layout_bits: Sequence[int], index: int) -> int:
    return sum(((index >> q) & 1) << i for i, q in enumerate(layout_bits))
