"""Reversible restoring integer divider: synthesis, Clifford+T lowering,
simulation and T-count accounting."""

__version__ = "0.1.0"

from .arith import (
    DividerInstance,
    build_adder,
    build_conditional_adder,
    build_divider,
    build_divider_iteration,
    build_subtractor,
)
from .circuit import Circuit, Gate, GateKind, Level, RegisterLayout, append, new_circuit
from .lowering import decompose_peres, decompose_toffoli, lower
from .qasm import export_qasm
from .refmodel import restoring_divide, restoring_divide_trace
from .resources import comparison_report, count, predicted_divider_tcount
from .revsim import (
    BasisState,
    check_equivalence,
    run_basis,
    run_statevector,
    unitary_of,
)

__all__ = [
    "BasisState", "Circuit", "DividerInstance", "Gate", "GateKind", "Level",
    "RegisterLayout", "append", "build_adder", "build_conditional_adder",
    "build_divider", "build_divider_iteration", "build_subtractor",
    "check_equivalence", "comparison_report", "count", "decompose_peres",
    "decompose_toffoli", "export_qasm", "lower", "new_circuit",
    "predicted_divider_tcount", "restoring_divide", "restoring_divide_trace",
    "run_basis", "run_statevector", "unitary_of",
]
