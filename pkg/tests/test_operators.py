"""Tests for the EPR/GHZ operator families and their decompositions."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from megs import (
    CapacityError,
    ClassKind,
    ClassLabel,
    PhaseKind,
    canonical_phases,
    complement,
    elementary_block,
    enumerate_class_operators,
    epr_operator,
    ghz_operator,
    index_pairs,
    split_anti_diagonal,
    split_sign_components,
)

from .oracles import ID2, SX, SY, kron_chain


class TestClassLabel:
    def test_epr_roundtrip(self):
        label = ClassLabel(ClassKind.EPR, (0, 1))
        assert str(label) == "EPR(0,1)"
        assert ClassLabel.parse("EPR(0,1)") == label

    def test_ghz_roundtrip(self):
        label = ClassLabel(ClassKind.GHZ, (0, 2, 3))
        assert str(label) == "GHZ3(0,2,3)"
        assert ClassLabel.parse("GHZ3(0,2,3)") == label
        assert ClassLabel.parse("ghz(0, 2, 3)") == label

    def test_epr_size(self):
        with pytest.raises(ValueError, match="exactly 2"):
            ClassLabel(ClassKind.EPR, (0, 1, 2))

    def test_ghz_size(self):
        with pytest.raises(ValueError, match="at least 3"):
            ClassLabel(ClassKind.GHZ, (0, 1))

    def test_sorted_distinct(self):
        with pytest.raises(ValueError):
            ClassLabel(ClassKind.EPR, (1, 0))
        with pytest.raises(ValueError):
            ClassLabel(ClassKind.GHZ, (0, 1, 1))

    def test_parse_size_mismatch(self):
        with pytest.raises(ValueError, match="does not match"):
            ClassLabel.parse("GHZ4(0,1,2)")

    def test_parse_garbage(self):
        with pytest.raises(ValueError, match="cannot parse"):
            ClassLabel.parse("BELL(0,1)")

    def test_validate_for_dims(self):
        label = ClassLabel(ClassKind.EPR, (0, 3))
        with pytest.raises(ValueError, match="does not fit"):
            label.validate_for_dims((2, 2, 2))


class TestElementaryBlock:
    def test_qubit_pi_is_sigma_x(self):
        assert np.array_equal(elementary_block(2, (0, 1), PhaseKind.PI), SX)

    def test_qubit_half_pi_is_sigma_y(self):
        assert np.array_equal(elementary_block(2, (0, 1), PhaseKind.HALF_PI), SY)

    def test_embedded_flip_in_dim_three(self):
        block = elementary_block(3, (0, 2), PhaseKind.PI)
        expected = np.zeros((3, 3), dtype=complex)
        expected[0, 2] = expected[2, 0] = 1
        assert np.array_equal(block, expected)

    @pytest.mark.parametrize("kind", [PhaseKind.HALF_PI, PhaseKind.PI])
    @pytest.mark.parametrize("dim", [2, 3, 4])
    def test_blocks_sum_to_canonical_complement(self, kind, dim):
        total = sum(elementary_block(dim, pair, kind) for pair in index_pairs(dim))
        assert np.array_equal(total, complement(canonical_phases(dim, kind)))

    def test_invalid_pair(self):
        with pytest.raises(ValueError):
            elementary_block(2, (1, 0), PhaseKind.PI)
        with pytest.raises(ValueError):
            elementary_block(2, (0, 2), PhaseKind.PI)


class TestEprOperator:
    def test_two_qubits(self):
        op = epr_operator((2, 2), (0, 1), ((0, 1), (0, 1)))
        assert np.array_equal(op.matrix, kron_chain(SY, SY))
        assert op.label == ClassLabel(ClassKind.EPR, (0, 1))
        assert op.pi_half_pair == (0, 1)

    def test_three_qubits_trailing_identity(self):
        op = epr_operator((2, 2, 2), (0, 1), ((0, 1), (0, 1)))
        assert np.array_equal(op.matrix, kron_chain(SY, SY, ID2))

    def test_middle_identity(self):
        op = epr_operator((2, 2, 2), (0, 2), ((0, 1), (0, 1)))
        assert np.array_equal(op.matrix, kron_chain(SY, ID2, SY))

    def test_qutrit_pair_four_entries(self):
        op = epr_operator((3, 3), (0, 1), ((0, 1), (0, 1)))
        rows, cols = np.nonzero(op.matrix)
        assert len(rows) == 4
        assert_allclose(np.abs(op.matrix[rows, cols]), 1.0, atol=0)

    def test_invalid_lambda(self):
        with pytest.raises(ValueError):
            epr_operator((2, 2), (0, 1), ((0, 1),))
        with pytest.raises(ValueError):
            epr_operator((2, 2), (0, 1), ((0, 1), (0, 2)))

    def test_capacity(self, monkeypatch):
        monkeypatch.setenv("MEGS_DENSE_CAP", "2")
        with pytest.raises(CapacityError):
            epr_operator((2, 2), (0, 1), ((0, 1), (0, 1)))


class TestGhzOperator:
    def test_three_qubits_pair_01(self):
        op = ghz_operator((2, 2, 2), (0, 1, 2), (0, 1), ((0, 1),) * 3)
        assert np.array_equal(op.matrix, kron_chain(SY, SY, SX))

    def test_four_qubits_trailing_identity(self):
        op = ghz_operator((2, 2, 2, 2), (0, 1, 2), (0, 1), ((0, 1),) * 3)
        assert np.array_equal(op.matrix, kron_chain(SY, SY, SX, ID2))

    def test_pi_block_on_leading_subsystem(self):
        op = ghz_operator((2, 2, 2), (0, 1, 2), (1, 2), ((0, 1),) * 3)
        assert np.array_equal(op.matrix, kron_chain(SX, SY, SY))

    def test_nonzero_entry_count(self):
        # 2^k entries on the active subset, replicated by inactive dims
        full = ghz_operator((2, 2, 2), (0, 1, 2), (0, 1), ((0, 1),) * 3)
        assert np.count_nonzero(full.matrix) == 8
        partial = ghz_operator((2, 2, 2, 2), (0, 1, 2), (0, 1), ((0, 1),) * 3)
        assert np.count_nonzero(partial.matrix) == 16

    def test_subset_too_small(self):
        with pytest.raises(ValueError, match=">= 3"):
            ghz_operator((2, 2, 2), (0, 1), (0, 1), ((0, 1),) * 2)

    def test_pair_outside_subset(self):
        with pytest.raises(ValueError, match="pi_half_pair"):
            ghz_operator((2, 2, 2, 2), (0, 1, 2), (0, 3), ((0, 1),) * 3)


def all_class_operators_for(dims):
    ops = []
    m = len(dims)
    for r1 in range(m):
        for r2 in range(r1 + 1, m):
            ops.extend(enumerate_class_operators(dims, ClassLabel(ClassKind.EPR, (r1, r2))))
    if m >= 3:
        ops.extend(enumerate_class_operators(dims, ClassLabel(ClassKind.GHZ, tuple(range(m)))))
    return ops


class TestOperatorInvariants:
    @pytest.mark.parametrize("dims", [(2, 2), (2, 2, 2), (3, 2), (3, 2, 2)])
    def test_hermitian_symmetric_zero_diagonal(self, dims):
        for op in all_class_operators_for(dims):
            mat = op.matrix
            assert np.array_equal(mat, mat.conj().T), "not Hermitian"
            assert np.array_equal(mat, mat.T), "not complex-symmetric"
            assert np.array_equal(np.diag(mat), np.zeros(mat.shape[0]))
            assert np.trace(mat) == 0

    @pytest.mark.parametrize("dims,pair", [((3, 3), (0, 1)), ((2, 3, 2), (1, 2))])
    def test_lambda_sum_recovers_pairwise_complement(self, dims, pair):
        # summing EPR operators over all lambda choices rebuilds the
        # multipartite complement restricted to the pair
        label = ClassLabel(ClassKind.EPR, pair)
        total = sum(op.matrix for op in enumerate_class_operators(dims, label))
        factors = [
            complement(canonical_phases(d, PhaseKind.HALF_PI)) if j in pair else np.eye(d)
            for j, d in enumerate(dims)
        ]
        assert np.array_equal(total, kron_chain(*factors))


class TestSplitAntiDiagonal:
    def test_two_qubit_entries(self):
        op = epr_operator((2, 2), (0, 1), ((0, 1), (0, 1)))
        upper, lower = split_anti_diagonal(op)
        assert upper[0, 3] == -1 and upper[1, 2] == 1
        assert np.count_nonzero(upper) == 2
        assert np.array_equal(lower, upper.conj().T)

    def test_reconstruction_exact(self):
        op = epr_operator((3, 2, 3), (0, 2), ((0, 2), (1, 2)))
        upper, lower = split_anti_diagonal(op)
        assert np.array_equal(upper + lower, op.matrix)
        assert np.array_equal(lower, upper.conj().T)

    def test_identity_factor_duplicates_entries(self):
        op = epr_operator((2, 2, 2), (0, 1), ((0, 1), (0, 1)))
        upper, _ = split_anti_diagonal(op)
        assert np.count_nonzero(upper) == 4
        assert np.array_equal(upper, np.triu(upper, 1))

    def test_rejects_ghz(self):
        op = ghz_operator((2, 2, 2), (0, 1, 2), (0, 1), ((0, 1),) * 3)
        with pytest.raises(ValueError, match="EPR"):
            split_anti_diagonal(op)


class TestSplitSignComponents:
    def test_component_count_three_qubits(self):
        op = ghz_operator((2, 2, 2), (0, 1, 2), (0, 1), ((0, 1),) * 3)
        assert len(split_sign_components(op)) == 4

    def test_reconstruction_and_disjoint_support(self):
        op = ghz_operator((3, 2, 2), (0, 1, 2), (1, 2), ((0, 2), (0, 1), (0, 1)))
        comps = split_sign_components(op)
        assert np.array_equal(sum(comps), op.matrix)
        support = np.zeros(op.matrix.shape, dtype=int)
        for comp in comps:
            assert np.count_nonzero(comp) == 2
            assert np.array_equal(comp, comp.conj().T)
            support += (comp != 0).astype(int)
        assert support.max() == 1

    def test_inactive_subsystem_component_count(self):
        op = ghz_operator((2, 2, 2, 2), (0, 1, 2), (0, 1), ((0, 1),) * 3)
        # 2^(k-1) sign pairings, one copy per inactive diagonal position
        assert len(split_sign_components(op)) == 8

    def test_rejects_epr(self):
        op = epr_operator((2, 2), (0, 1), ((0, 1), (0, 1)))
        with pytest.raises(ValueError, match="split_anti_diagonal"):
            split_sign_components(op)


class TestEnumerateClassOperators:
    def test_two_qubit_epr_single_operator(self):
        ops = enumerate_class_operators((2, 2), ClassLabel(ClassKind.EPR, (0, 1)))
        assert len(ops) == 1

    def test_three_qubit_ghz_three_operators(self):
        ops = enumerate_class_operators((2, 2, 2), ClassLabel(ClassKind.GHZ, (0, 1, 2)))
        assert [op.pi_half_pair for op in ops] == [(0, 1), (0, 2), (1, 2)]

    def test_qutrit_epr_three_operators(self):
        ops = enumerate_class_operators((3, 2), ClassLabel(ClassKind.EPR, (0, 1)))
        assert [op.lam[0] for op in ops] == [(0, 1), (0, 2), (1, 2)]

    @pytest.mark.parametrize(
        "dims,label,expected",
        [
            ((3, 3), ClassLabel(ClassKind.EPR, (0, 1)), 9),
            ((3, 2, 2), ClassLabel(ClassKind.GHZ, (0, 1, 2)), 9),
            ((2, 2, 2, 2), ClassLabel(ClassKind.GHZ, (0, 1, 3)), 3),
        ],
    )
    def test_count_formula(self, dims, label, expected):
        # EPR: prod of pair counts; GHZ: C(k,2) * prod of pair counts
        assert len(enumerate_class_operators(dims, label)) == expected

    def test_deterministic_ordering(self):
        label = ClassLabel(ClassKind.GHZ, (0, 1, 2))
        first = enumerate_class_operators((3, 2, 2), label)
        second = enumerate_class_operators((3, 2, 2), label)
        assert [(o.pi_half_pair, o.lam) for o in first] == [(o.pi_half_pair, o.lam) for o in second]
        keys = [(o.pi_half_pair, o.lam) for o in first]
        assert keys == sorted(keys)

    def test_label_dims_mismatch(self):
        with pytest.raises(ValueError, match="does not fit"):
            enumerate_class_operators((2, 2), ClassLabel(ClassKind.EPR, (0, 2)))
