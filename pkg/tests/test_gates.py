"""Gate matrices, op validation, and the composite carry/sum networks."""

import itertools
import math

import numpy as np
import pytest

from qadd.circuit import Circuit
from qadd.errors import QubitIndexError
from qadd.gates import (
    CNOT,
    ControlledRk,
    Hadamard,
    Rk,
    Toffoli,
    carry_ops,
    gate_matrix,
    inverse_op,
    is_diagonal,
    op_qubits,
    rotation_order,
    sum_ops,
)
from qadd.statevec import basis_state, readout
from support import classical_carry_action, classical_sum_action


class TestGateMatrix:
    def test_controlled_r1_is_cz(self):
        np.testing.assert_allclose(
            gate_matrix(ControlledRk(0, 1, k=1)), np.diag([1, 1, 1, -1]), atol=1e-12
        )

    def test_hadamard(self):
        h = 1 / math.sqrt(2)
        np.testing.assert_allclose(
            gate_matrix(Hadamard(0)), [[h, h], [h, -h]], atol=1e-12
        )

    def test_inverted_r2(self):
        np.testing.assert_allclose(
            gate_matrix(ControlledRk(0, 1, k=2, inverted=True)),
            np.diag([1, 1, 1, -1j]),
            atol=1e-12,
        )

    def test_cnot_permutes_upper_block(self):
        m = gate_matrix(CNOT(0, 1))
        expected = np.eye(4)[[0, 1, 3, 2]]
        np.testing.assert_array_equal(m.real, expected)

    def test_all_matrices_unitary(self):
        ops = [Hadamard(0), CNOT(0, 1), Toffoli(0, 1, 2)]
        for k in range(1, 7):
            for inv in (False, True):
                ops.append(Rk(0, k, inv))
                ops.append(ControlledRk(0, 1, k, inv))
        for op in ops:
            u = gate_matrix(op)
            np.testing.assert_allclose(
                u @ u.conj().T, np.eye(u.shape[0]), atol=1e-12, err_msg=repr(op)
            )


class TestOpValidation:
    def test_duplicate_indices_rejected(self):
        with pytest.raises(QubitIndexError):
            CNOT(1, 1)
        with pytest.raises(QubitIndexError):
            Toffoli(0, 2, 2)
        with pytest.raises(QubitIndexError):
            ControlledRk(3, 3, k=1)

    def test_negative_index_rejected(self):
        with pytest.raises(QubitIndexError):
            Hadamard(-1)

    def test_rotation_order_must_be_positive(self):
        with pytest.raises(ValueError):
            Rk(0, k=0)
        with pytest.raises(ValueError):
            ControlledRk(0, 1, k=-2)

    def test_op_qubits_order(self):
        assert op_qubits(Toffoli(4, 2, 0)) == (4, 2, 0)
        assert op_qubits(ControlledRk(1, 3, k=2)) == (1, 3)

    def test_is_diagonal(self):
        assert is_diagonal(Rk(0, 1))
        assert is_diagonal(ControlledRk(0, 1, 2))
        assert not is_diagonal(Hadamard(0))
        assert not is_diagonal(CNOT(0, 1))

    def test_rotation_order_accessor(self):
        assert rotation_order(Rk(0, 3)) == 3
        with pytest.raises(ValueError):
            rotation_order(Hadamard(0))


class TestInverseOp:
    def test_self_inverse_kinds(self):
        for op in (Hadamard(1), CNOT(0, 1), Toffoli(0, 1, 2)):
            assert inverse_op(op) == op

    def test_rotation_flips_flag(self):
        assert inverse_op(Rk(0, 2)) == Rk(0, 2, inverted=True)
        assert inverse_op(inverse_op(ControlledRk(0, 1, 3))) == ControlledRk(0, 1, 3)


def _run_bits(ops, num_qubits, bits):
    """Evaluate a gate list on a classical bit assignment via simulation."""
    value = sum(bit << i for i, bit in enumerate(bits))
    out = Circuit(num_qubits=num_qubits, ops=tuple(ops)).run(basis_state(num_qubits, value))
    result = readout(out, 1e-12)
    return tuple((result >> i) & 1 for i in range(num_qubits))


class TestCarryOps:
    def test_all_16_inputs_match_truth_model(self):
        ops = carry_ops(0, 1, 2, 3)
        for bits in itertools.product((0, 1), repeat=4):
            assert _run_bits(ops, 4, bits) == classical_carry_action(*bits), bits

    def test_spec_tuples(self):
        ops = carry_ops(0, 1, 2, 3)
        assert _run_bits(ops, 4, (0, 1, 1, 0)) == (0, 1, 0, 1)
        assert _run_bits(ops, 4, (1, 1, 0, 0)) == (1, 1, 1, 1)
        assert _run_bits(ops, 4, (0, 0, 0, 0)) == (0, 0, 0, 0)

    def test_reverse_undoes_forward(self):
        ops = carry_ops(0, 1, 2, 3) + carry_ops(0, 1, 2, 3, reverse=True)
        for bits in itertools.product((0, 1), repeat=4):
            assert _run_bits(ops, 4, bits) == bits

    def test_gate_sequence(self):
        assert carry_ops(0, 1, 2, 3) == [Toffoli(1, 2, 3), CNOT(1, 2), Toffoli(0, 2, 3)]
        assert carry_ops(0, 1, 2, 3, reverse=True) == [
            Toffoli(0, 2, 3),
            CNOT(1, 2),
            Toffoli(1, 2, 3),
        ]

    def test_distinct_indices_required(self):
        with pytest.raises(QubitIndexError):
            carry_ops(0, 1, 1, 3)


class TestSumOps:
    def test_all_8_inputs(self):
        ops = sum_ops(0, 1, 2)
        for bits in itertools.product((0, 1), repeat=3):
            assert _run_bits(ops, 3, bits) == classical_sum_action(*bits), bits

    def test_gate_sequence(self):
        assert sum_ops(0, 1, 2) == [CNOT(1, 2), CNOT(0, 2)]
