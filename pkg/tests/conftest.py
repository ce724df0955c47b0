import functools

import numpy as np
import pytest
from hypothesis import strategies as st

from qdiv.arith import build_divider
from qdiv.circuit import Circuit, Gate, GateKind, Level

PERM_KINDS = [GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.PERES]
CT_KINDS = [GateKind.X, GateKind.CNOT, GateKind.H, GateKind.T, GateKind.TDG,
            GateKind.S, GateKind.SDG]
KINDS_AT = {
    Level.LOGICAL: PERM_KINDS + CT_KINDS[2:],
    Level.TOFFOLI_CNOT: [GateKind.X, GateKind.CNOT, GateKind.TOFFOLI] + CT_KINDS[2:],
    Level.CLIFFORD_T: CT_KINDS,
}


@st.composite
def gates(draw, width, kinds):
    usable = [k for k in kinds if k.arity <= width]
    kind = draw(st.sampled_from(usable))
    ops = draw(st.permutations(range(width)))[: kind.arity]
    return Gate(kind, ops)


@st.composite
def circuits(draw, level=Level.LOGICAL, min_width=3, max_width=6, max_gates=12,
             kinds=None):
    width = draw(st.integers(min_width, max_width))
    kinds = kinds or KINDS_AT[level]
    gs = draw(st.lists(gates(width, kinds), max_size=max_gates))
    return Circuit(width, tuple(gs), level)


def permutation_circuits(**kw):
    return circuits(level=Level.LOGICAL, kinds=PERM_KINDS, **kw)


def truth_table_step(bits, gate):
    """Independent reference semantics of one permutation gate on a bit list."""
    bits = list(bits)
    ops = gate.operands
    if gate.kind is GateKind.X:
        bits[ops[0]] ^= 1
    elif gate.kind is GateKind.CNOT:
        bits[ops[1]] ^= bits[ops[0]]
    elif gate.kind is GateKind.TOFFOLI:
        bits[ops[2]] ^= bits[ops[0]] & bits[ops[1]]
    elif gate.kind is GateKind.PERES:
        a, b, c = (bits[q] for q in ops)
        bits[ops[0]], bits[ops[1]], bits[ops[2]] = a, a ^ b, c ^ (a & b)
    else:
        raise AssertionError(gate)
    return bits


def reference_permutation_matrix(circuit):
    """Unitary of a permutation circuit built from truth tables alone."""
    dim = 1 << circuit.width
    m = np.zeros((dim, dim))
    for j in range(dim):
        bits = [(j >> i) & 1 for i in range(circuit.width)]
        for g in circuit.gates:
            bits = truth_table_step(bits, g)
        m[sum(b << i for i, b in enumerate(bits)), j] = 1
    return m


def reg_value(bits, register):
    return sum(bits[q] << i for i, q in enumerate(register))


@functools.lru_cache(maxsize=None)
def divider(n):
    return build_divider(n)


@pytest.fixture(scope="session")
def divider_of():
    return divider


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
