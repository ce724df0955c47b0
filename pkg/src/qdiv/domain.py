"""Oracle sweeps over the divider and the empirical map of its valid domain."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .arith import DividerInstance, build_divider
from .errors import BadWidth
from .refmodel import max_divisor
from .revsim import run_basis_batch

EXHAUSTIVE_MAX_N = 5


def _to_rows(bits: Sequence[int], values: np.ndarray, out: np.ndarray) -> None:
    for i, q in enumerate(bits):
        out[q] = (values >> np.uint64(i)) & np.uint64(1)


def _from_rows(bits: Sequence[int], rows: np.ndarray) -> np.ndarray:
    acc = np.zeros(rows.shape[1], dtype=np.uint64)
    for i, q in enumerate(bits):
        acc |= rows[q].astype(np.uint64) << np.uint64(i)
    return acc


def simulate(instance: DividerInstance, dividends, divisors) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Run the divider on paired inputs; returns (quotient, remainder, divisor_out)."""
    dividends = np.asarray(dividends, dtype=np.uint64).ravel()
    divisors = np.asarray(divisors, dtype=np.uint64).ravel()
    if dividends.shape != divisors.shape:
        raise ValueError("dividends and divisors must pair up")
    lay = instance.layout
    rows = np.zeros((instance.circuit.width, dividends.size), dtype=bool)
    _to_rows(lay.q_bits, dividends, rows)
    _to_rows(lay.d_bits, divisors, rows)
    out = run_basis_batch(instance.circuit, rows)
    return (
        _from_rows(lay.quotient_bits, out),
        _from_rows(lay.remainder_bits, out),
        _from_rows(lay.d_bits, out),
    )


@dataclass
class SweepResult:
    n: int
    mode: str
    passed: int
    failed: int
    divisor_always_preserved: bool
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "passed": self.passed,
            "failed": self.failed,
            "divisor_always_preserved": self.divisor_always_preserved,
            "counterexample": self.counterexample,
        }


def _compare(instance, dividends, divisors, mode) -> SweepResult:
    q, r, d_out = simulate(instance, dividends, divisors)
    dividends = np.asarray(dividends, dtype=np.uint64)
    divisors = np.asarray(divisors, dtype=np.uint64)
    good = (q == dividends // divisors) & (r == dividends % divisors) & (d_out == divisors)
    bad = np.flatnonzero(~good)
    example = None
    if bad.size:
        k = bad[0]
        example = {
            "dividend": int(dividends[k]),
            "divisor": int(divisors[k]),
            "quotient": int(q[k]),
            "remainder": int(r[k]),
            "expected_quotient": int(dividends[k] // divisors[k]),
            "expected_remainder": int(dividends[k] % divisors[k]),
        }
    return SweepResult(
        instance.n, mode, int(good.sum()), int(bad.size),
        bool(np.all(d_out == divisors)), example,
    )


def exhaustive_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All dividends against every supported divisor."""
    xs = np.arange(1 << n, dtype=np.uint64)
    ds = np.arange(1, max_divisor(n) + 1, dtype=np.uint64)
    dd, xx = np.meshgrid(ds, xs, indexing="ij")
    return xx.ravel(), dd.ravel()


def random_pairs(n: int, samples: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Dividends uniform on [0, 2^n), divisors uniform on the supported range."""
    rng = np.random.default_rng(seed)
    xs = rng.integers(0, 1 << n, size=samples, dtype=np.uint64)
    ds = rng.integers(1, max_divisor(n), size=samples, dtype=np.uint64, endpoint=True)
    return xs, ds


def verify_exhaustive(n: int, instance: DividerInstance | None = None) -> SweepResult:
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise BadWidth(f"exhaustive sweeps are limited to 1 <= n <= {EXHAUSTIVE_MAX_N}")
    instance = instance or build_divider(n)
    xs, ds = exhaustive_pairs(n)
    return _compare(instance, xs, ds, "exhaustive")


def verify_random(n: int, samples: int, seed: int = 0,
                  instance: DividerInstance | None = None) -> SweepResult:
    if n < 1 or n > 63:
        raise BadWidth("random sweeps support 1 <= n <= 63")
    if samples < 1:
        raise ValueError("need at least one sample")
    instance = instance or build_divider(n)
    xs, ds = random_pairs(n, samples, seed)
    return _compare(instance, xs, ds, "random")


@dataclass
class DomainReport:
    """Which (dividend, divisor) pairs the n-bit divider gets right."""

    n: int
    max_valid_divisor: int
    failing_divisors: list[int]
    failures_per_divisor: dict[int, int]
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def statement(self) -> str:
        top = (1 << self.n) - 1
        text = (
            f"n={self.n}: correct for every dividend in [0, {top}] and every divisor "
            f"in [1, {self.max_valid_divisor}]"
        )
        if self.failing_divisors:
            text += (
                f"; each divisor in [{min(self.failing_divisors)}, {max(self.failing_divisors)}] "
                "has at least one wrong result"
            )
        return text

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_valid_divisor": self.max_valid_divisor,
            "failing_divisors": self.failing_divisors,
            "failures_per_divisor": {str(k): v for k, v in self.failures_per_divisor.items()},
            "counterexamples": self.counterexamples,
            "statement": self.statement,
        }


def map_valid_domain(n: int) -> DomainReport:
    """Run every non-zero divisor against every dividend and tabulate failures."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise BadWidth(f"domain mapping is limited to 1 <= n <= {EXHAUSTIVE_MAX_N}")
    inst = build_divider(n)
    xs = np.tile(np.arange(1 << n, dtype=np.uint64), (1 << n) - 1)
    ds = np.repeat(np.arange(1, 1 << n, dtype=np.uint64), 1 << n)
    q, r, d_out = simulate(inst, xs, ds)
    good = (q == xs // ds) & (r == xs % ds) & (d_out == ds)
    failures: dict[int, int] = {}
    examples = []
    for k in np.flatnonzero(~good):
        d = int(ds[k])
        if d not in failures:
            examples.append({
                "dividend": int(xs[k]), "divisor": d,
                "quotient": int(q[k]), "remainder": int(r[k]),
                "expected_quotient": int(xs[k] // ds[k]),
                "expected_remainder": int(xs[k] % ds[k]),
            })
        failures[d] = failures.get(d, 0) + 1
    failing = sorted(failures)
    max_ok = (min(failing) - 1) if failing else (1 << n) - 1
    return DomainReport(n, max_ok, failing, failures, examples)
