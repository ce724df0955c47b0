"""OpenQASM 2.0 emitter and a minimal reader for round-trip checks."""
from __future__ import annotations

import re

from .circuit import Circuit, Gate, GateKind, Level
from .errors import UnexportableGate

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'

_NAMES = {
    GateKind.X: "x",
    GateKind.CNOT: "cx",
    GateKind.TOFFOLI: "ccx",
    GateKind.H: "h",
    GateKind.T: "t",
    GateKind.TDG: "tdg",
    GateKind.S: "s",
    GateKind.SDG: "sdg",
}
_KINDS = {name: kind for kind, name in _NAMES.items()}

_LINE = re.compile(r"^([a-z]+)\s+(q\[\d+\](?:\s*,\s*q\[\d+\])*)\s*;$")
_QREG = re.compile(r"^qreg\s+q\[(\d+)\]\s*;$")


def export_qasm(circuit: Circuit) -> str:
    """Serialize a ToffoliCnot or CliffordT circuit.

    Output is deterministic and uses LF line endings.  Peres has no QASM
    primitive, so any Peres gate raises :class:`UnexportableGate`.
    """
    lines = [HEADER.rstrip("\n"), f"qreg q[{circuit.width}];"]
    for gate in circuit.gates:
        name = _NAMES.get(gate.kind)
        if name is None:
            raise UnexportableGate(
                f"{gate!r} cannot be written as QASM; lower the circuit first"
            )
        args = ",".join(f"q[{q}]" for q in gate.operands)
        lines.append(f"{name} {args};")
    return "\n".join(lines) + "\n"


def parse_qasm(text: str) -> Circuit:
    """Read back text produced by :func:`export_qasm`.

    Only the single-register subset written by the exporter is understood.
    """
    width = None
    gates = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("//") or line.startswith("OPENQASM") or line.startswith("include"):
            continue
        m = _QREG.match(line)
        if m:
            width = int(m.group(1))
            continue
        m = _LINE.match(line)
        if m is None or m.group(1) not in _KINDS:
            raise ValueError(f"unsupported QASM line: {raw!r}")
        operands = tuple(int(x) for x in re.findall(r"q\[(\d+)\]", m.group(2)))
        gates.append(Gate(_KINDS[m.group(1)], operands))
    if width is None:
        raise ValueError("no qreg declaration found")
    level = Level.TOFFOLI_CNOT if any(g.kind is GateKind.TOFFOLI for g in gates) else Level.CLIFFORD_T
    return Circuit(width, tuple(gates), level)
