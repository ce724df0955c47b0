"""Classical reference model of the restoring divider.

The model works in n-bit modular arithmetic on the same registers the
circuit uses, including the spare qubit each iteration borrows, so operands
outside the supported domain fail here exactly as they fail in the circuit.
The branch condition is the sign of ``R - D``: a set sign bit means the trial
subtraction went negative and the divisor is added back.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadWidth, DivisionByZero, DomainViolation


@dataclass(frozen=True)
class IterationSnapshot:
    iteration: int
    window_before: int
    window_after_subtract: int
    sign: int
    restored: bool
    quotient_bit: int
    window_after: int


def max_divisor(n: int) -> int:
    """Largest divisor handled for n-bit operands (sign of R - D must fit)."""
    return 1 << (n - 1)


def check_domain(dividend: int, divisor: int, n: int) -> None:
    if n < 1:
        raise BadWidth(f"operand width must be at least 1, got {n}")
    if divisor == 0:
        raise DivisionByZero("divisor must be non-zero")
    if not 0 <= dividend < (1 << n):
        raise DomainViolation(f"dividend must lie in [0, {(1 << n) - 1}] for n={n}")
    if not 1 <= divisor <= max_divisor(n):
        raise DomainViolation(f"divisor must lie in [1, {max_divisor(n)}] for n={n}")


def simulate_trace(dividend: int, divisor: int, n: int) -> tuple[list[IterationSnapshot], int, int]:
    """Unchecked register-level model; returns (snapshots, quotient, remainder).

    Valid for any n-bit operands, in or out of domain.
    """
    mask = (1 << n) - 1
    top = n - 1
    window = 0
    snaps = []
    quotient = 0
    for i in range(1, n + 1):
        # shift by re-indexing: the old MSB becomes this iteration's spare
        spare = (window >> top) & 1
        window = ((window << 1) | ((dividend >> (n - i)) & 1)) & mask
        before = window
        window = (window - divisor) & mask
        diff = window
        sign = (window >> top) & 1
        ctrl = spare ^ sign
        if ctrl:
            window = (window + divisor) & mask
        qbit = ctrl ^ 1
        quotient |= qbit << (n - i)
        snaps.append(IterationSnapshot(i, before, diff, sign, bool(ctrl), qbit, window))
    return snaps, quotient, window


def restoring_divide_trace(dividend: int, divisor: int, n: int) -> list[IterationSnapshot]:
    check_domain(dividend, divisor, n)
    return simulate_trace(dividend, divisor, n)[0]


def restoring_divide(dividend: int, divisor: int, n: int) -> tuple[int, int]:
    """Quotient and remainder by n iterations of shift, subtract, restore."""
    check_domain(dividend, divisor, n)
    _, q, r = simulate_trace(dividend, divisor, n)
    return q, r
