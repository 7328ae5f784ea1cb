import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from projrange.errors import DimensionMismatch, NotHermitian
from projrange.linalg import (OrthonormalBasis, ProjectionPair, five_part_decomposition,
                              hermitian_eig, jacobi_eigh, operator_norm, orthonormalize,
                              principal_cosines, projector, subspace_intersection)
from projrange.pairs import make_rng, random_pair, two_lines


def e(d, *idx):
    return OrthonormalBasis.standard(d, idx)


def test_orthonormalize_drops_collinear():
    b = orthonormalize(np.array([[1, 2], [0, 0]], dtype=complex))
    assert b.dim == 1
    assert np.allclose(np.abs(b.vectors[:, 0]), [1, 0])


def test_orthonormalize_keeps_orthonormal_input():
    b = orthonormalize(np.eye(2, dtype=complex))
    assert np.allclose(b.vectors, np.eye(2))


def test_orthonormalize_gram_is_identity():
    b = orthonormalize(np.array([[1, 1], [1, 0]], dtype=complex) / np.array([np.sqrt(2), 1]))
    assert b.dim == 2
    assert np.max(np.abs(b.vectors.conj().T @ b.vectors - np.eye(2))) < 1e-14


def test_orthonormal_basis_rejects_non_orthonormal():
    with pytest.raises(ValueError):
        OrthonormalBasis(np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex))


def test_projector_examples():
    assert np.allclose(projector(e(2, 0)), [[1, 0], [0, 0]])
    line = OrthonormalBasis(np.array([[1], [1]], dtype=complex) / np.sqrt(2))
    assert np.allclose(projector(line), [[0.5, 0.5], [0.5, 0.5]])
    assert np.array_equal(projector(OrthonormalBasis.empty(3)), np.zeros((3, 3)))


@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
@settings(max_examples=40, deadline=None)
def test_projector_is_hermitian_idempotent(seed, d):
    pair = random_pair(seed, d + 1, d, 1)
    p = pair.p1
    assert np.max(np.abs(p @ p - p)) < 1e-12
    assert np.max(np.abs(p - p.conj().T)) < 1e-14


def test_hermitian_eig_examples():
    assert np.allclose(hermitian_eig(np.diag([0.0, 1.0])).eigenvalues, [0, 1])
    assert np.allclose(hermitian_eig(np.full((2, 2), 0.5)).eigenvalues, [0, 1], atol=1e-15)
    th = 0.4
    assert np.allclose(hermitian_eig(two_lines(th).gram).eigenvalues, [0, np.cos(th) ** 2])


def test_hermitian_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eig(np.array([[0, 1], [0, 0]], dtype=complex))


@given(st.integers(0, 2**32 - 1), st.integers(1, 12))
@settings(max_examples=40, deadline=None)
def test_jacobi_matches_lapack(seed, d):
    rng = make_rng(seed)
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    h = (a + a.conj().T) / 2
    lap = hermitian_eig(h)
    jac = hermitian_eig(h, method="jacobi")
    assert np.max(np.abs(lap.eigenvalues - jac.eigenvalues)) < 1e-11 * max(1, np.abs(lap.eigenvalues).max())
    v = jac.eigenvectors.vectors
    assert np.max(np.abs(h @ v - v * jac.eigenvalues)) < 1e-10 * max(1, np.abs(lap.eigenvalues).max())


def test_jacobi_on_diagonal_is_exact():
    w, v = jacobi_eigh(np.diag([3.0, 1.0, 2.0]).astype(complex))
    assert list(w) == [1.0, 2.0, 3.0]


def test_subspace_intersection_examples():
    inter = subspace_intersection(e(3, 0, 1), e(3, 1, 2))
    assert inter.dim == 1 and np.allclose(np.abs(inter.vectors[:, 0]), [0, 1, 0])
    assert subspace_intersection(two_lines(0.3).basis1, two_lines(0.3).basis2).dim == 0
    a = e(4, 0, 2)
    assert np.allclose(projector(subspace_intersection(a, a)), projector(a))


def test_principal_cosines_two_lines():
    pair = two_lines(0.7)
    assert principal_cosines(pair.basis1, pair.basis2) == pytest.approx([np.cos(0.7)], abs=1e-15)


def test_five_part_decomposition_c3_example():
    dec = five_part_decomposition(ProjectionPair(e(3, 0), e(3, 1)))
    assert dec.dims() == (0, 1, 1, 1, 0)
    assert np.allclose(np.abs(dec.m1_cap_m2perp.vectors[:, 0]), [1, 0, 0])
    assert np.allclose(np.abs(dec.m1perp_cap_m2.vectors[:, 0]), [0, 1, 0])
    assert np.allclose(np.abs(dec.m1perp_cap_m2perp.vectors[:, 0]), [0, 0, 1])


def test_five_part_decomposition_identity_and_lines():
    full = e(3, 0, 1, 2)
    assert five_part_decomposition(ProjectionPair(full, full)).dims() == (3, 0, 0, 0, 0)
    assert five_part_decomposition(two_lines(0.5)).dims() == (0, 0, 0, 0, 2)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=30, deadline=None)
def test_five_parts_fill_the_space(seed):
    rng = make_rng(seed)
    d = int(rng.integers(3, 12))
    shared, only1, only2 = (int(x) for x in rng.integers(0, 2, 3))
    rest = d - shared - only1 - only2
    pair = random_pair(seed, d, shared + only1 + int(rng.integers(0, rest + 1)),
                       shared + only2 + int(rng.integers(0, rest + 1)), shared, only1, only2)
    dec = five_part_decomposition(pair)
    assert sum(dec.dims()) == d
    assert dec.dims()[0] >= shared
    assert dec.generic_part.dim % 2 == 0


def test_operator_norm_examples():
    assert operator_norm(np.eye(4)) == pytest.approx(1.0, abs=1e-15)
    assert operator_norm(two_lines(0.6).product) == pytest.approx(np.cos(0.6), abs=1e-15)
    assert operator_norm(np.zeros((3, 3))) == 0.0


def test_pair_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        ProjectionPair(e(2, 0), e(3, 0))
