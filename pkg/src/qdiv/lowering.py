"""Lowering passes: Peres -> {Toffoli, CNOT}, Toffoli -> Clifford+T."""
from __future__ import annotations

from .circuit import CNOT, Circuit, Gate, GateKind, H, Level, T, Tdg, Toffoli
from .errors import InvalidDirection, WrongKind

T_PER_TOFFOLI = 7

_new = tuple.__new__
_H, _CX, _T, _TDG = GateKind.H, GateKind.CNOT, GateKind.T, GateKind.TDG


def _toffoli_network(qubits: tuple[int, ...]) -> list[Gate]:
    """Phase-exact 7-T Toffoli network; frozen so exported QASM is stable."""
    c0, c1, t = qubits
    return [
        _new(Gate, (_H, (t,))),
        _new(Gate, (_CX, (c1, t))),
        _new(Gate, (_TDG, (t,))),
        _new(Gate, (_CX, (c0, t))),
        _new(Gate, (_T, (t,))),
        _new(Gate, (_CX, (c1, t))),
        _new(Gate, (_TDG, (t,))),
        _new(Gate, (_CX, (c0, t))),
        _new(Gate, (_T, (c1,))),
        _new(Gate, (_T, (t,))),
        _new(Gate, (_H, (t,))),
        _new(Gate, (_CX, (c0, c1))),
        _new(Gate, (_T, (c0,))),
        _new(Gate, (_TDG, (c1,))),
        _new(Gate, (_CX, (c0, c1))),
    ]


# (kind, operand slots) with slots indexing (c0, c1, target)
TOFFOLI_NETWORK: tuple[tuple[GateKind, tuple[int, ...]], ...] = tuple(
    (g.kind, g.operands) for g in _toffoli_network((0, 1, 2))
)


def decompose_peres(gate: Gate) -> list[Gate]:
    """Peres(a, b, c) as Toffoli(a, b, c) followed by the Feynman gate CNOT(a, b)."""
    if gate.kind is not GateKind.PERES:
        raise WrongKind(f"expected a Peres gate, got {gate!r}")
    a, b, c = gate.operands
    return [Toffoli(a, b, c), CNOT(a, b)]


def decompose_toffoli(gate: Gate) -> list[Gate]:
    if gate.kind is not GateKind.TOFFOLI:
        raise WrongKind(f"expected a Toffoli gate, got {gate!r}")
    return _toffoli_network(gate.operands)


def lower(circuit: Circuit, target: "Level | str") -> Circuit:
    """Substitute gates until ``circuit`` only uses kinds allowed at ``target``.

    Gates that need no decomposition keep their relative order.
    """
    target = Level.parse(target)
    if target > circuit.level:
        raise InvalidDirection(
            f"cannot raise a {circuit.level.name} circuit to {target.name}"
        )
    if target == circuit.level:
        return circuit
    # operands come from a validated circuit, so output gates skip re-checks
    to_clifford_t = target is Level.CLIFFORD_T
    out: list[Gate] = []
    for gate in circuit.gates:
        kind = gate.kind
        if kind is GateKind.PERES:
            a, b, c = gate.operands
            if to_clifford_t:
                out.extend(_toffoli_network((a, b, c)))
            else:
                out.append(Gate._trusted(GateKind.TOFFOLI, (a, b, c)))
            out.append(Gate._trusted(GateKind.CNOT, (a, b)))
        elif kind is GateKind.TOFFOLI and to_clifford_t:
            out.extend(_toffoli_network(gate.operands))
        else:
            out.append(gate)
    return Circuit._trusted(circuit.width, tuple(out), target)
