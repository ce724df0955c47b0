"""Reversible arithmetic blocks and the restoring divider built from them.

The adder is the in-place ripple-carry construction with no ancilla and no
carry-out qubit: carries are computed into the ``a`` register, written into
``b`` and uncomputed again, with each carry uncompute fused with the
neighbouring sum write as a Peres gate.  It spends ``2n - 2``
Toffoli-equivalents.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .circuit import Circuit, Gate, GateKind, Level, RegisterLayout
from .errors import BadWidth, CtrlOverlap, LayoutExhausted, OverlappingRegisters


def _check_registers(n: int, a_bits: Sequence[int], b_bits: Sequence[int]) -> None:
    if n < 1:
        raise BadWidth(f"register width must be at least 1, got {n}")
    if len(a_bits) != n or len(b_bits) != n:
        raise BadWidth(f"both registers must hold {n} qubits")
    if len(set(a_bits) | set(b_bits)) != 2 * n:
        raise OverlappingRegisters("a and b registers must be disjoint with distinct qubits")
    if min(min(a_bits), min(b_bits)) < 0:
        raise BadWidth("qubit indices must be non-negative")


# Operands below come from registers already checked to be distinct and
# non-negative, so gates are built without per-gate validation.
_gate = Gate._trusted
_X, _CX, _CCX, _PERES = GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.PERES


def _adder_gates(a: Sequence[int], b: Sequence[int]) -> list[tuple[Gate, bool]]:
    """Modular adder netlist; the flag marks gates that write a sum bit.

    A flagged gate is either the lone CNOT onto ``b[n-1]`` or a Peres gate
    whose Feynman half writes ``b[i]``.
    """
    n = len(a)
    out: list[tuple[Gate, bool]] = []
    for i in range(1, n):
        out.append((_gate(_CX, (a[i], b[i])), False))
    for i in range(n - 2, 0, -1):
        out.append((_gate(_CX, (a[i], a[i + 1])), False))
    for i in range(n - 1):
        out.append((_gate(_CCX, (a[i], b[i], a[i + 1])), False))
    out.append((_gate(_CX, (a[n - 1], b[n - 1])), True))
    for i in range(n - 1, 0, -1):
        out.append((_gate(_PERES, (a[i - 1], b[i - 1], a[i])), True))
    for i in range(1, n - 1):
        out.append((_gate(_CX, (a[i], a[i + 1])), False))
    for i in range(1, n):
        out.append((_gate(_CX, (a[i], b[i])), False))
    return out


def _subtractor_gates(a: Sequence[int], b: Sequence[int]) -> list[Gate]:
    flips = [_gate(_X, (q,)) for q in b]
    return flips + [g for g, _ in _adder_gates(a, b)] + flips


def _conditional_adder_gates(ctrl: int, a: Sequence[int], b: Sequence[int]) -> list[Gate]:
    gates: list[Gate] = []
    for gate, writes_sum in _adder_gates(a, b):
        if not writes_sum:
            gates.append(gate)
        elif gate.kind is _CX:
            gates.append(_gate(_CCX, (ctrl,) + gate.operands))
        else:
            x, y, z = gate.operands
            gates.append(_gate(_CCX, (x, y, z)))
            gates.append(_gate(_CCX, (ctrl, x, y)))
    return gates


def _width_of(*registers: Sequence[int]) -> int:
    return max(max(r) for r in registers if len(r)) + 1


def build_adder(n: int, a_bits: Sequence[int], b_bits: Sequence[int],
                width: int | None = None) -> Circuit:
    """``|a, b> -> |a, (a + b) mod 2**n>`` in place, zero ancillae."""
    _check_registers(n, a_bits, b_bits)
    width = _width_of(a_bits, b_bits) if width is None else width
    return Circuit(width, tuple(g for g, _ in _adder_gates(a_bits, b_bits)), Level.LOGICAL)


def build_subtractor(n: int, a_bits: Sequence[int], b_bits: Sequence[int],
                     width: int | None = None) -> Circuit:
    """``|a, b> -> |a, (b - a) mod 2**n>`` as complement, add, complement."""
    _check_registers(n, a_bits, b_bits)
    width = _width_of(a_bits, b_bits) if width is None else width
    return Circuit(width, tuple(_subtractor_gates(a_bits, b_bits)), Level.LOGICAL)


def build_conditional_adder(n: int, ctrl: int, a_bits: Sequence[int],
                            b_bits: Sequence[int], width: int | None = None) -> Circuit:
    """Add ``a`` into ``b`` when ``ctrl`` is 1, otherwise leave ``b`` alone.

    Derived from the plain adder by turning each sum-writing Feynman gate
    into a Toffoli with ``ctrl`` as the extra control; Peres gates are split
    first.  The carry chain still runs for ``ctrl = 0`` and uncomputes itself.
    """
    _check_registers(n, a_bits, b_bits)
    if ctrl in set(a_bits) | set(b_bits):
        raise CtrlOverlap(f"control qubit {ctrl} is part of an operand register")
    width = _width_of(a_bits, b_bits, [ctrl]) if width is None else width
    return Circuit(width, tuple(_conditional_adder_gates(ctrl, a_bits, b_bits)), Level.LOGICAL)


@dataclass(frozen=True)
class DividerInstance:
    n: int
    circuit: Circuit
    layout: RegisterLayout

    @property
    def ancillae(self) -> int:
        """Qubits that must start in |0>: the remainder register."""
        return len(self.layout.r_bits)


def _window(layout: RegisterLayout, iteration: int) -> tuple[int, ...]:
    n = layout.n
    q, r = layout.q_bits, layout.r_bits
    return q[n - iteration:] + r[: n - iteration]


def build_divider_iteration(
    n: int, layout: RegisterLayout, iteration: int
) -> tuple[Circuit, RegisterLayout]:
    """One subtract / test / conditional restore round.

    The left shift is pure re-indexing: iteration ``i`` subtracts from the
    window ``Q[n-i:] + R[:n-i]`` and uses ``R[n-i]`` as its spare qubit, which
    is zero on entry and holds the quotient bit of weight ``2**(n-i)`` on exit.
    """
    if n < 1 or layout.n != n:
        raise BadWidth(f"layout is for n={layout.n}, not n={n}")
    if iteration < 1 or iteration > n:
        raise LayoutExhausted(f"iteration {iteration} has no spare qubit (n={n})")
    if len(layout.retired) != iteration - 1:
        raise LayoutExhausted(
            f"layout has completed {len(layout.retired)} iterations; cannot run iteration {iteration}"
        )
    window = _window(layout, iteration)
    spare = layout.r_bits[n - iteration]
    d = layout.d_bits
    width = 3 * n
    gates = _subtractor_gates(d, window)
    gates.append(_gate(_CX, (window[-1], spare)))
    gates += _conditional_adder_gates(spare, d, window)
    gates.append(_gate(_X, (spare,)))
    next_window = _window(layout, iteration + 1) if iteration < n else window
    updated = replace(layout, window=next_window, retired=layout.retired + (spare,))
    return Circuit(width, tuple(gates), Level.LOGICAL), updated


def build_divider(n: int) -> DividerInstance:
    """Full n-iteration restoring divider over ``3n`` qubits.

    Inputs: dividend on ``layout.q_bits``, divisor on ``layout.d_bits``, zeros
    on ``layout.r_bits``.  Outputs: quotient on ``layout.quotient_bits``
    (these are the original R qubits), remainder on ``layout.remainder_bits``
    (the original Q qubits), divisor unchanged.
    """
    if n < 1:
        raise BadWidth(f"divider width must be at least 1, got {n}")
    layout = RegisterLayout.standard(n)
    layout = replace(layout, window=_window(layout, 1))
    gates: list[Gate] = []
    for i in range(1, n + 1):
        fragment, layout = build_divider_iteration(n, layout, i)
        gates.extend(fragment.gates)
    layout = replace(
        layout,
        quotient_bits=tuple(reversed(layout.retired)),
        remainder_bits=layout.window,
    )
    # fragments were validated individually
    return DividerInstance(n, Circuit._trusted(3 * n, tuple(gates), Level.LOGICAL), layout)
