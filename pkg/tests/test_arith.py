from dataclasses import replace
import itertools

import numpy as np
import pytest

from qdiv.arith import (
    build_adder, build_conditional_adder, build_divider, build_divider_iteration,
    build_subtractor,
)
from qdiv.circuit import CNOT, GateKind, Level, RegisterLayout, Toffoli, decode, encode
from qdiv.errors import BadWidth, CtrlOverlap, LayoutExhausted, OverlappingRegisters
from qdiv.lowering import lower
from qdiv.refmodel import simulate_trace
from qdiv.revsim import run_basis_batch, run_basis_int


def regs(n):
    return list(range(n)), list(range(n, 2 * n))


def sweep(circuit, registers):
    """Output register values for every input assignment, via batch simulation."""
    sizes = [len(r) for r in registers]
    total = sum(sizes)
    idx = np.arange(1 << total, dtype=np.int64)
    rows = np.zeros((circuit.width, idx.size), dtype=bool)
    offset = 0
    inputs = []
    for reg in registers:
        vals = (idx >> offset) & ((1 << len(reg)) - 1)
        inputs.append(vals)
        for i, q in enumerate(reg):
            rows[q] = (vals >> i) & 1
        offset += len(reg)
    out = run_basis_batch(circuit, rows)
    outputs = [(out[list(reg)].astype(np.int64) << np.arange(len(reg))[:, None]).sum(axis=0)
               for reg in registers]
    return inputs, outputs


class TestAdder:

    def test_n1_is_single_cnot(self):
        a, b = regs(1)
        c = build_adder(1, a, b)
        assert c.gates == (CNOT(0, 1),)
        assert c.toffoli_count() == 0

    def test_example_n3(self):
        a, b = regs(3)
        c = build_adder(3, a, b)
        out = run_basis_int(c, encode(a, 5) | encode(b, 6))
        assert decode(a, out) == 5 and decode(b, out) == 3

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_exhaustive(self, n):
        a, b = regs(n)
        (av, bv), (ao, bo) = sweep(build_adder(n, a, b), [a, b])
        assert np.array_equal(ao, av)
        assert np.array_equal(bo, (av + bv) % (1 << n))

    @pytest.mark.parametrize("n", range(1, 12))
    def test_budget(self, n):
        a, b = regs(n)
        c = build_adder(n, a, b)
        assert c.toffoli_count() == 2 * n - 2
        assert set(c.histogram()) <= {"X", "CNOT", "TOFFOLI", "PERES"}
        assert c.width == 2 * n

    def test_n4_lowered_tcount(self):
        a, b = regs(4)
        assert lower(build_adder(4, a, b), Level.CLIFFORD_T).t_count() == 42

    def test_scattered_registers(self):
        a, b = [7, 2, 5], [0, 9, 3]
        c = build_adder(3, a, b)
        for x, y in itertools.product(range(8), repeat=2):
            out = run_basis_int(c, encode(a, x) | encode(b, y))
            assert decode(b, out) == (x + y) % 8 and decode(a, out) == x

    def test_errors(self):
        with pytest.raises(BadWidth):
            build_adder(0, [], [])
        with pytest.raises(OverlappingRegisters):
            build_adder(2, [0, 1], [1, 2])
        with pytest.raises(BadWidth):
            build_adder(2, [0, 1], [2])


class TestSubtractor:

    @pytest.mark.parametrize("n, a, b, expected", [(3, 3, 1, 6), (4, 3, 5, 2)])
    def test_examples(self, n, a, b, expected):
        ar, br = regs(n)
        out = run_basis_int(build_subtractor(n, ar, br), encode(ar, a) | encode(br, b))
        assert decode(br, out) == expected and decode(ar, out) == a

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_exhaustive(self, n):
        a, b = regs(n)
        (av, bv), (ao, bo) = sweep(build_subtractor(n, a, b), [a, b])
        assert np.array_equal(ao, av)
        assert np.array_equal(bo, (bv - av) % (1 << n))

    def test_structure(self):
        a, b = regs(3)
        c = build_subtractor(3, a, b)
        flips = [g.operands[0] for g in c.gates[:3]] + [g.operands[0] for g in c.gates[-3:]]
        assert all(g.kind is GateKind.X for g in c.gates[:3] + c.gates[-3:])
        assert flips == b + b
        assert c.gates[3:-3] == build_adder(3, a, b).gates

    def test_n5_lowered_tcount(self):
        a, b = regs(5)
        assert lower(build_subtractor(5, a, b), Level.CLIFFORD_T).t_count() == 56

    @pytest.mark.parametrize("n", range(1, 12))
    def test_budget(self, n):
        a, b = regs(n)
        assert build_subtractor(n, a, b).toffoli_count() == 2 * n - 2


class TestConditionalAdder:

    def layout(self, n):
        a, b = regs(n)
        return 2 * n, a, b

    def test_ctrl_zero_n4(self):
        ctrl, a, b = self.layout(4)
        c = build_conditional_adder(4, ctrl, a, b)
        for x, y in itertools.product(range(16), repeat=2):
            out = run_basis_int(c, encode(a, x) | encode(b, y))
            assert (decode(a, out), decode(b, out), (out >> ctrl) & 1) == (x, y, 0)

    def test_ctrl_one_example(self):
        ctrl, a, b = self.layout(4)
        c = build_conditional_adder(4, ctrl, a, b)
        out = run_basis_int(c, encode(a, 9) | encode(b, 9) | (1 << ctrl))
        assert decode(b, out) == 2 and decode(a, out) == 9 and (out >> ctrl) & 1

    def test_n1_is_one_toffoli(self):
        ctrl, a, b = self.layout(1)
        c = build_conditional_adder(1, ctrl, a, b)
        assert c.gates == (Toffoli(2, 0, 1),)
        assert lower(c, Level.CLIFFORD_T).t_count() == 7

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_exhaustive(self, n):
        ctrl, a, b = self.layout(n)
        c = build_conditional_adder(n, ctrl, a, b)
        (av, bv, cv), (ao, bo, co) = sweep(c, [a, b, [ctrl]])
        assert np.array_equal(ao, av) and np.array_equal(co, cv)
        assert np.array_equal(bo, np.where(cv == 1, (av + bv) % (1 << n), bv))

    @pytest.mark.parametrize("n", range(1, 12))
    def test_budget(self, n):
        ctrl, a, b = self.layout(n)
        assert build_conditional_adder(n, ctrl, a, b).toffoli_count() == 3 * n - 2

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_is_adder_with_controlled_sum_writes(self, n):
        # split Peres gates, then exactly n CNOTs onto b gain ctrl as control
        ctrl, a, b = self.layout(n)
        plain = lower(build_adder(n, a, b), Level.TOFFOLI_CNOT).gates
        cond = build_conditional_adder(n, ctrl, a, b).gates
        assert len(plain) == len(cond)
        changed = [(p, q) for p, q in zip(plain, cond) if p != q]
        assert len(changed) == n
        for p, q in changed:
            assert p.kind is GateKind.CNOT and q == Toffoli(ctrl, *p.operands)
            assert p.operands[1] in b

    def test_ctrl_overlap(self):
        with pytest.raises(CtrlOverlap):
            build_conditional_adder(2, 1, [0, 1], [2, 3])


def standard_inputs(layout, dividend, divisor):
    return encode(layout.q_bits, dividend) | encode(layout.d_bits, divisor)


class TestDividerIteration:

    def start(self, n):
        lay = RegisterLayout.standard(n)
        return replace(lay, window=lay.q_bits[n - 1:] + lay.r_bits[: n - 1])

    def test_first_iteration_example(self):
        lay = self.start(3)
        frag, new = build_divider_iteration(3, lay, 1)
        assert lay.window == (2, 6, 7)
        out = run_basis_int(frag, standard_inputs(lay, 5, 2))
        spare = lay.r_bits[2]
        assert (out >> spare) & 1 == 0
        assert decode(lay.window, out) == 1
        assert new.retired == (spare,)
        assert new.window == (1, 2, 6)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_zero_dividend_restores(self, n):
        lay = self.start(n)
        frag, _ = build_divider_iteration(n, lay, 1)
        for d in range(1, (1 << (n - 1)) + 1):
            out = run_basis_int(frag, standard_inputs(lay, 0, d))
            assert decode(lay.window, out) == 0
            assert (out >> lay.r_bits[n - 1]) & 1 == 0

    @pytest.mark.parametrize("n", range(1, 10))
    def test_iteration_tcount(self, n):
        frag, _ = build_divider_iteration(n, self.start(n), 1)
        assert lower(frag, Level.CLIFFORD_T).t_count() == 35 * n - 28

    def test_matches_trace_each_iteration(self):
        n = 4
        for x in range(16):
            for d in range(1, 9):
                lay = self.start(n)
                state = standard_inputs(lay, x, d)
                snaps, _, _ = simulate_trace(x, d, n)
                for i in range(1, n + 1):
                    window = lay.q_bits[n - i:] + lay.r_bits[: n - i]
                    assert decode(window, state) == snaps[i - 1].window_before
                    frag, lay = build_divider_iteration(n, lay, i)
                    state = run_basis_int(frag, state)
                    assert decode(window, state) == snaps[i - 1].window_after
                    assert (state >> lay.retired[-1]) & 1 == snaps[i - 1].quotient_bit

    def test_exhausted(self):
        lay = self.start(2)
        with pytest.raises(LayoutExhausted):
            build_divider_iteration(2, lay, 3)
        with pytest.raises(LayoutExhausted):
            build_divider_iteration(2, lay, 2)


class TestDivider:

    def test_shape(self):
        inst = build_divider(4)
        assert inst.circuit.width == 12
        assert inst.ancillae == 4
        assert inst.layout.complete
        assert inst.layout.quotient_bits == inst.layout.r_bits
        assert inst.layout.remainder_bits == inst.layout.q_bits

    def test_example(self):
        inst = build_divider(4)
        lay = inst.layout
        out = run_basis_int(inst.circuit, standard_inputs(lay, 13, 3))
        assert (decode(lay.quotient_bits, out), decode(lay.remainder_bits, out),
                decode(lay.d_bits, out)) == (4, 1, 3)

    def test_divide_by_one(self):
        inst = build_divider(3)
        lay = inst.layout
        for x in range(8):
            out = run_basis_int(inst.circuit, standard_inputs(lay, x, 1))
            assert decode(lay.quotient_bits, out) == x and decode(lay.remainder_bits, out) == 0

    @pytest.mark.parametrize("n", [3, 4])
    def test_exhaustive_in_domain(self, n):
        inst = build_divider(n)
        lay = inst.layout
        for d in range(1, (1 << (n - 1)) + 1):
            for x in range(1 << n):
                out = run_basis_int(inst.circuit, standard_inputs(lay, x, d))
                assert decode(lay.quotient_bits, out) == x // d
                assert decode(lay.remainder_bits, out) == x % d
                assert decode(lay.d_bits, out) == d
                assert out & encode(lay.r_bits, (1 << n) - 1) == encode(lay.quotient_bits, x // d)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_agrees_with_register_model_everywhere(self, n):
        # including divisors outside the supported range and divisor 0
        inst = build_divider(n)
        lay = inst.layout
        for d in range(1 << n):
            for x in range(1 << n):
                out = run_basis_int(inst.circuit, standard_inputs(lay, x, d))
                _, q, r = simulate_trace(x, d, n)
                assert (decode(lay.quotient_bits, out), decode(lay.remainder_bits, out)) == (q, r)

    @pytest.mark.parametrize("n", range(1, 17))
    def test_budget(self, n):
        assert build_divider(n).circuit.toffoli_count() == n * (5 * n - 4)

    def test_n1(self):
        inst = build_divider(1)
        assert inst.circuit.toffoli_count() == 1
        assert lower(inst.circuit, Level.CLIFFORD_T).t_count() == 7

    def test_bad_width(self):
        with pytest.raises(BadWidth):
            build_divider(0)

    def test_reversible_n2_exhaustive(self):
        c = build_divider(2).circuit
        assert sorted(run_basis_int(c, j) for j in range(64)) == list(range(64))

    def test_reversible_n8_random(self):
        c = build_divider(8).circuit
        rng = np.random.default_rng(2024)
        inputs = np.unique(rng.integers(0, 1 << 24, size=100_000))
        rows = ((inputs[None, :] >> np.arange(24)[:, None]) & 1).astype(bool)
        out = run_basis_batch(c, rows)
        packed = (out.astype(np.int64) << np.arange(24)[:, None]).sum(axis=0)
        assert np.unique(packed).size == inputs.size
