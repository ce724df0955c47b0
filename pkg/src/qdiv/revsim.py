"""Basis-state (permutation) and dense state-vector simulation.

Basis index convention: ``index = sum(bit_i << i)``, qubit 0 least significant.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .circuit import Circuit, GateKind
from .errors import NonPermutationGate, WidthLimitExceeded, WidthMismatch

DEFAULT_WIDTH_LIMIT = 14
UNITARY_WIDTH_LIMIT = 6
NORM_TOL = 1e-10

_X, _CX, _CCX, _PERES = GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.PERES


def width_limit() -> int:
    """State-vector width guard; ``QDIV_WIDTH_LIMIT`` overrides the default."""
    raw = os.environ.get("QDIV_WIDTH_LIMIT")
    return int(raw) if raw else DEFAULT_WIDTH_LIMIT


@dataclass(frozen=True)
class BasisState:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("basis state bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_int(cls, value: int, width: int) -> "BasisState":
        if not 0 <= value < (1 << width) and not (width == 0 and value == 0):
            raise ValueError(f"{value} does not fit in {width} qubits")
        return cls(tuple((value >> i) & 1 for i in range(width)))

    @property
    def width(self) -> int:
        return len(self.bits)

    def to_int(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))


def _permutation_program(circuit: Circuit) -> list[tuple]:
    prog = []
    for g in circuit.gates:
        if not g.kind.is_permutation:
            raise NonPermutationGate(
                f"{g!r} is not a classical reversible gate; use run_statevector"
            )
        prog.append((g.kind, g.operands))
    return prog


def run_basis_int(circuit: Circuit, value: int) -> int:
    """Apply the circuit's truth table to one packed basis index."""
    s = value
    for kind, ops in _permutation_program(circuit):
        if kind is _X:
            s ^= 1 << ops[0]
        elif kind is _CX:
            if (s >> ops[0]) & 1:
                s ^= 1 << ops[1]
        elif kind is _CCX:
            if (s >> ops[0]) & (s >> ops[1]) & 1:
                s ^= 1 << ops[2]
        else:
            a, b, c = ops
            if (s >> a) & 1:
                if (s >> b) & 1:
                    s ^= 1 << c
                s ^= 1 << b
    return s


def run_basis(circuit: Circuit, state: BasisState) -> BasisState:
    if state.width != circuit.width:
        raise WidthMismatch(
            f"state has {state.width} bits but the circuit has {circuit.width} qubits"
        )
    return BasisState.from_int(run_basis_int(circuit, state.to_int()), circuit.width)


def run_basis_batch(circuit: Circuit, bits: np.ndarray) -> np.ndarray:
    """Simulate many basis inputs at once.

    ``bits`` is a boolean array of shape ``(width, batch)``; row ``q`` holds
    qubit ``q`` across the batch.  Returns a new array of the same shape.
    """
    bits = np.array(bits, dtype=bool, copy=True)
    if bits.ndim != 2 or bits.shape[0] != circuit.width:
        raise WidthMismatch(
            f"expected an array of shape ({circuit.width}, batch), got {bits.shape}"
        )
    for kind, ops in _permutation_program(circuit):
        if kind is _X:
            np.logical_not(bits[ops[0]], out=bits[ops[0]])
        elif kind is _CX:
            bits[ops[1]] ^= bits[ops[0]]
        elif kind is _CCX:
            bits[ops[2]] ^= bits[ops[0]] & bits[ops[1]]
        else:
            a, b, c = ops
            bits[c] ^= bits[a] & bits[b]
            bits[b] ^= bits[a]
    return bits


def _guard(width: int, limit: int) -> None:
    if width > limit:
        raise WidthLimitExceeded(
            f"state-vector simulation of {width} qubits exceeds the limit of {limit}"
        )


_HALF = 1 / np.sqrt(2)
_PHASE = {
    GateKind.T: np.exp(1j * np.pi / 4),
    GateKind.TDG: np.exp(-1j * np.pi / 4),
    GateKind.S: 1j,
    GateKind.SDG: -1j,
}


def _apply(circuit: Circuit, psi: np.ndarray) -> np.ndarray:
    idx = np.arange(psi.shape[0])
    for g in circuit.gates:
        ops = g.operands
        kind = g.kind
        if kind in _PHASE:
            mask = ((idx >> ops[0]) & 1).astype(bool)
            psi = psi.copy()
            psi[mask] *= _PHASE[kind]
        elif kind is GateKind.H:
            bit = 1 << ops[0]
            low = (idx & bit) == 0
            a = psi[low]
            b = psi[idx[low] | bit]
            psi = psi.copy()
            psi[low] = (a + b) * _HALF
            psi[idx[low] | bit] = (a - b) * _HALF
        else:
            # scatter amplitude of index i to f(i)
            if kind is _X:
                image = idx ^ (1 << ops[0])
            elif kind is _CX:
                image = idx ^ (((idx >> ops[0]) & 1) << ops[1])
            elif kind is _CCX:
                image = idx ^ (((idx >> ops[0]) & (idx >> ops[1]) & 1) << ops[2])
            else:
                a, b, c = ops
                abit = (idx >> a) & 1
                flip_c = abit & (idx >> b) & 1
                image = idx ^ (flip_c << c) ^ (abit << b)
            out = np.empty_like(psi)
            out[image] = psi
            psi = out
    return psi


def run_statevector(
    circuit: Circuit, state: "BasisState | int", limit: int | None = None
) -> np.ndarray:
    """Dense simulation from a basis input; returns ``2**width`` amplitudes."""
    _guard(circuit.width, width_limit() if limit is None else limit)
    index = state.to_int() if isinstance(state, BasisState) else int(state)
    psi = np.zeros(1 << circuit.width, dtype=complex)
    psi[index] = 1.0
    return _apply(circuit, psi)


def apply_to_vector(circuit: Circuit, psi: Sequence[complex]) -> np.ndarray:
    """Apply the circuit to a state, or to each column of a ``(2**width, k)`` array."""
    psi = np.asarray(psi, dtype=complex)
    _guard(circuit.width, width_limit())
    if psi.shape[0] != 1 << circuit.width or psi.ndim > 2:
        raise WidthMismatch("vector length does not match circuit width")
    return _apply(circuit, psi)


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Full unitary, column ``j`` being the image of basis state ``j``."""
    _guard(circuit.width, UNITARY_WIDTH_LIMIT)
    dim = 1 << circuit.width
    cols = [run_statevector(circuit, j, limit=UNITARY_WIDTH_LIMIT) for j in range(dim)]
    return np.column_stack(cols) if cols else np.eye(dim, dtype=complex)


def check_equivalence(c1: Circuit, c2: Circuit, tolerance: float = 1e-12) -> bool:
    """True iff the two unitaries agree entrywise, with no global-phase freedom."""
    if c1.width != c2.width:
        raise WidthMismatch(f"widths differ: {c1.width} vs {c2.width}")
    diff = np.abs(unitary_of(c1) - unitary_of(c2))
    return bool(diff.max(initial=0.0) <= tolerance)
