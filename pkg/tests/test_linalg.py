import random
from fractions import Fraction

import pytest

from lieyamaguti.errors import NotASubspace, ShapeMismatch
from lieyamaguti.linalg import Matrix, SubspaceBasis, kernel_basis, quotient_dim, rank


def test_rank_identity():
    assert rank(Matrix.identity(3)) == 3


def test_rank_zero():
    assert rank(Matrix.zero(2, 2)) == 0


def test_rank_dependent_rows():
    # second row is twice the first
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_identity_empty():
    assert kernel_basis(Matrix.identity(4)).dim == 0


def test_kernel_zero_map_full():
    basis = kernel_basis(Matrix.zero(3, 3))
    assert basis.dim == 3


def test_kernel_vectors_map_to_zero():
    m = Matrix.from_rows([[1, 1, 0]])
    basis = kernel_basis(m)
    assert basis.dim == 2
    for v in basis:
        assert all(x == 0 for x in m.matvec(v))


def test_rank_nullity_random():
    rng = random.Random(99)
    for _ in range(40):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        m = Matrix(
            rows, cols, [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(rows * cols)]
        )
        ker = kernel_basis(m)
        assert rank(m) + ker.dim == cols
        for v in ker:
            assert all(x == 0 for x in m.matvec(v))


def test_quotient_dim_trivial_cases():
    z = SubspaceBasis(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert quotient_dim(z, SubspaceBasis(3)) == 3
    assert quotient_dim(z, z) == 0


def test_quotient_dim_line_in_plane():
    z = SubspaceBasis(2, [[1, 0], [0, 1]])
    b = SubspaceBasis(2, [[1, 1]])
    assert quotient_dim(z, b) == 1


def test_quotient_dim_requires_containment():
    z = SubspaceBasis(2, [[1, 0]])
    b = SubspaceBasis(2, [[0, 1]])
    with pytest.raises(NotASubspace):
        quotient_dim(z, b)


def test_quotient_dim_consistency_random():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 6)
        vecs = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(rng.randint(0, n))]
        z = SubspaceBasis(n, vecs)
        sub = [v for v in vecs[: rng.randint(0, len(vecs))]]
        b = SubspaceBasis(n, sub)
        assert quotient_dim(z, b) + b.dim == z.dim


def test_subspace_basis_reduces_dependent_input():
    b = SubspaceBasis(2, [[1, 1], [2, 2]])
    assert b.dim == 1


def test_matrix_inverse_and_det():
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert m.det() == -2
    inv = m.inverse()
    assert m @ inv == Matrix.identity(2)


def test_singular_inverse_raises():
    with pytest.raises(ShapeMismatch):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_shape_mismatch_on_bad_entries():
    with pytest.raises(ShapeMismatch):
        Matrix(2, 2, [1, 2, 3])
