import numpy as np
import pytest

from rigidlab.config import DEFAULT_MODULUS
from rigidlab.exceptions import InvalidArgumentError, NotPrimeError
from rigidlab.field import FieldMatrix, PrimeField, kernel_basis, plu, random_vector, rank, rref


class TestPrimeField:
    def test_default_modulus(self):
        assert PrimeField().modulus == DEFAULT_MODULUS == 2**61 - 1

    @pytest.mark.parametrize("modulus", [0, 1, 4, 2**61 + 1, 561])
    def test_rejects_composites(self, modulus):
        with pytest.raises(NotPrimeError) as exc_info:
            PrimeField(modulus)
        assert exc_info.value.modulus == modulus

    def test_not_prime_error_is_value_error(self):
        with pytest.raises(ValueError):
            PrimeField(9)

    def test_inverse(self, field):
        for a in (1, 2, 12345, field.modulus - 1):
            assert a * field.inv(a) % field.modulus == 1

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            PrimeField(7).inv(14)

    def test_random_vector_is_reproducible(self, field):
        a = field.random_vector(10, np.random.default_rng([3, 0]))
        b = field.random_vector(10, np.random.default_rng([3, 0]))
        assert a == b
        assert all(0 <= x < field.modulus for x in a)

    def test_random_vector_above_int64(self):
        big = PrimeField(2**89 - 1)
        values = big.random_vector(20, np.random.default_rng(1))
        assert len(values) == 20
        assert all(0 <= x < big.modulus for x in values)
        assert any(x >= 2**64 for x in values)

    def test_module_level_random_vector_uses_default_field(self):
        values = random_vector(5, np.random.default_rng(0))
        assert all(0 <= x < DEFAULT_MODULUS for x in values)


class TestFieldMatrix:
    def test_from_rows_reduces_entries(self, field):
        m = field.matrix([[-1, field.modulus + 2]])
        assert m.to_rows() == [[field.modulus - 1, 2]]

    def test_ragged_rows_rejected(self, field):
        with pytest.raises(InvalidArgumentError):
            field.matrix([[1, 2], [3]])

    def test_non_2d_data_rejected(self, field):
        with pytest.raises(InvalidArgumentError):
            FieldMatrix(field, np.zeros(3, dtype=object))

    def test_shape_and_transpose(self, field):
        m = field.matrix([[1, 2, 3], [4, 5, 6]])
        assert m.shape == (2, 3)
        assert m.T.to_rows() == [[1, 4], [2, 5], [3, 6]]

    def test_matmul(self):
        f = PrimeField(7)
        a = f.matrix([[1, 2], [3, 4]])
        b = f.matrix([[5, 6], [0, 1]])
        assert (a @ b).to_rows() == [[5, 8 % 7], [15 % 7, 22 % 7]]

    def test_matmul_shape_mismatch(self, field):
        with pytest.raises(InvalidArgumentError):
            field.matrix([[1, 2]]) @ field.matrix([[1, 2]])

    def test_apply(self):
        f = PrimeField(5)
        assert f.matrix([[1, 2], [3, 4]]).apply([1, 1]) == [3, 2]

    def test_equality_and_hash(self, field):
        a = field.matrix([[1, 2]])
        b = field.matrix([[1, 2]])
        assert a == b
        assert hash(a) == hash(b)
        assert a != field.matrix([[2, 1]])

    def test_identity(self, field):
        assert FieldMatrix.identity(field, 2).to_rows() == [[1, 0], [0, 1]]


class TestRank:
    def test_full_rank(self, field):
        assert rank(field.matrix([[1, 2], [3, 4]])) == 2

    def test_dependent_rows(self, field):
        assert rank(field.matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])) == 2

    def test_rank_depends_on_characteristic(self):
        rows = [[1, 1], [1, 3]]
        assert rank(PrimeField(7).matrix(rows)) == 2
        assert rank(PrimeField(2).matrix(rows)) == 1

    def test_empty(self, field):
        assert rank(FieldMatrix.zeros(field, 0, 4)) == 0
        assert rank(FieldMatrix.zeros(field, 3, 3)) == 0

    def test_method_delegates(self, field):
        assert field.matrix([[0, 1], [0, 2]]).rank() == 1

    def test_random_square_matrix_is_invertible(self, field):
        rng = np.random.default_rng(5)
        rows = [field.random_vector(8, rng) for _ in range(8)]
        assert rank(field.matrix(rows)) == 8

    @pytest.mark.parametrize("shape, inner", [((5, 9), 5), ((9, 4), 4), ((7, 7), 3), ((6, 8), 1)])
    def test_transpose_has_same_rank(self, field, shape, inner):
        rng = np.random.default_rng([11, *shape, inner])
        left = field.matrix([field.random_vector(inner, rng) for _ in range(shape[0])])
        right = field.matrix([field.random_vector(shape[1], rng) for _ in range(inner)])
        m = left @ right
        assert rank(m) == rank(m.T) == inner


class TestRref:
    def test_reduced_form(self):
        f = PrimeField(7)
        reduced, pivots = rref(f.matrix([[2, 4, 1], [1, 2, 1]]))
        assert pivots == [0, 2]
        assert reduced.to_rows() == [[1, 2, 0], [0, 0, 1]]


class TestKernelBasis:
    def test_dimension_is_cols_minus_rank(self, field):
        m = field.matrix([[1, 2, 3, 4], [2, 4, 6, 8]])
        basis = kernel_basis(m)
        assert len(basis) == 3
        for x in basis:
            assert m.apply(x) == [0, 0]

    def test_full_column_rank_has_trivial_kernel(self, field):
        assert kernel_basis(field.matrix([[1, 0], [0, 1], [1, 1]])) == []

    def test_zero_matrix(self, field):
        assert kernel_basis(FieldMatrix.zeros(field, 2, 2)) == [[1, 0], [0, 1]]


class TestPlu:
    def test_factorisation(self, field):
        m = field.matrix([[0, 2, 1], [3, 1, 0], [6, 2, 4]])
        perm, lower, upper = plu(m)
        permuted = field.matrix([m.to_rows()[i] for i in perm])
        assert lower @ upper == permuted

    def test_lower_is_unit_triangular(self, field):
        m = field.matrix([[2, 1], [4, 3], [6, 5]])
        _, lower, upper = plu(m)
        rows = lower.to_rows()
        assert all(rows[i][i] == 1 for i in range(3))
        assert all(rows[i][j] == 0 for i in range(3) for j in range(i + 1, 3))
        assert upper.to_rows()[2] == [0, 0]

    def test_rank_deficient(self, field):
        m = field.matrix([[1, 2], [2, 4]])
        perm, lower, upper = plu(m)
        assert lower @ upper == field.matrix([m.to_rows()[i] for i in perm])
