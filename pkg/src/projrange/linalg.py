"""Dense complex linear algebra for pairs of orthogonal projections.

Matrices are plain ``complex128`` numpy arrays. Subspaces are carried as
:class:`OrthonormalBasis` values whose columns are orthonormal; the empty
subspace is a ``d x 0`` basis, so ``projector`` of it is the zero matrix and
no call site needs a special case.

Everything returned here is read-only. Functions never mutate their inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, NotHermitian

#: Default threshold for every rank decision (Gram-Schmidt drop, intersections).
RANK_TOL = 1e-9

_ORTHO_TOL = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex, copy=True)
    a.flags.writeable = False
    return a


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a finite complex matrix (read-only copy)."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return _frozen(m)


def real_part(a: np.ndarray) -> np.ndarray:
    """Hermitian part ``(A + A*) / 2``; works on stacks of matrices."""
    return 0.5 * (a + np.conj(np.swapaxes(a, -1, -2)))


@dataclass(frozen=True)
class OrthonormalBasis:
    """Columns of ``vectors`` form an orthonormal family in C^d."""

    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2:
            raise DimensionMismatch("basis vectors must be given as a d x k array")
        gram = v.conj().T @ v
        err = np.max(np.abs(gram - np.eye(v.shape[1])), initial=0.0)
        if err > _ORTHO_TOL:
            raise ValueError(f"columns are not orthonormal (Gram error {err:.3g})")
        object.__setattr__(self, "vectors", _frozen(v))

    @classmethod
    def empty(cls, ambient_dim: int) -> "OrthonormalBasis":
        return cls(np.zeros((ambient_dim, 0), dtype=complex))

    @classmethod
    def standard(cls, ambient_dim: int, indices: Iterable[int]) -> "OrthonormalBasis":
        eye = np.eye(ambient_dim, dtype=complex)
        return cls(eye[:, list(indices)])

    @property
    def ambient_dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def __len__(self):
        return self.dim


def orthonormalize(vectors, tol: float = RANK_TOL) -> OrthonormalBasis:
    """Gram-Schmidt with one reorthogonalization pass and rank detection.

    ``vectors`` is either a sequence of 1-D arrays or a ``d x k`` array whose
    columns are the vectors. A vector whose residual after projecting out the
    previously accepted ones has norm ``<= tol`` is dropped.
    """
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        cols = [vectors[:, j] for j in range(vectors.shape[1])]
        d = vectors.shape[0]
    else:
        cols = [np.asarray(v, dtype=complex).ravel() for v in vectors]
        if not cols:
            raise DimensionMismatch("cannot infer the ambient dimension of an empty list")
        d = cols[0].shape[0]
    if any(c.shape[0] != d for c in cols):
        raise DimensionMismatch("all vectors must have the same length")
    if d < 1:
        raise DimensionMismatch("ambient dimension must be at least 1")

    kept: list[np.ndarray] = []
    for c in cols:
        r = np.array(c, dtype=complex)
        for _ in range(2):
            for q in kept:
                r = r - (q.conj() @ r) * q
        nrm = np.linalg.norm(r)
        if nrm > tol:
            kept.append(r / nrm)
    if not kept:
        return OrthonormalBasis.empty(d)
    return OrthonormalBasis(np.column_stack(kept))


def projector(basis: OrthonormalBasis) -> np.ndarray:
    """Orthogonal projector ``B B*`` onto the span of ``basis``."""
    b = basis.vectors
    return _frozen(b @ b.conj().T)


@dataclass(frozen=True)
class HermitianEigenDecomposition:
    eigenvalues: np.ndarray
    eigenvectors: OrthonormalBasis

    def __post_init__(self):
        w = np.array(self.eigenvalues, dtype=float)
        w.flags.writeable = False
        object.__setattr__(self, "eigenvalues", w)


def _check_hermitian(h: np.ndarray, tol: float) -> np.ndarray:
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {h.shape}")
    asym = np.max(np.abs(h - h.conj().T), initial=0.0)
    if asym > tol:
        raise NotHermitian(f"||H - H*||_max = {asym:.3g} exceeds {tol:.3g}")
    return real_part(h)


def jacobi_eigh(h: np.ndarray, tol: float = 1e-15, max_sweeps: int = 60):
    """Cyclic Jacobi eigensolver for a Hermitian matrix.

    Each rotation first removes the phase of the pivot ``h[p, q]`` and then
    applies the real symmetric Schur rotation. Returns ascending eigenvalues
    and the unitary matrix of eigenvectors (columns).
    """
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(np.linalg.norm(a), 1e-300)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                app, aqq = a[p, p].real, a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rot = np.array([[c, s], [-np.conj(phase) * s, np.conj(phase) * c]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ rot
    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eig(h: np.ndarray, tol: float = 1e-10, method: str = "lapack") -> HermitianEigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    ``method="lapack"`` (default) uses ``numpy.linalg.eigh``; ``"jacobi"``
    uses :func:`jacobi_eigh`. Both are deterministic for identical input.
    """
    hs = _check_hermitian(h, tol)
    if method == "lapack":
        w, v = np.linalg.eigh(hs)
    elif method == "jacobi":
        w, v = jacobi_eigh(hs)
    else:
        raise ValueError(f"unknown eigensolver method {method!r}")
    return HermitianEigenDecomposition(w, OrthonormalBasis(v))


def orthogonal_complement(basis: OrthonormalBasis, tol: float = RANK_TOL) -> OrthonormalBasis:
    d, k = basis.ambient_dim, basis.dim
    if k == 0:
        return OrthonormalBasis(np.eye(d, dtype=complex))
    u, s, _ = np.linalg.svd(basis.vectors, full_matrices=True)
    rank = int(np.sum(s > tol))
    return OrthonormalBasis(u[:, rank:])


def span_union(*bases: OrthonormalBasis, tol: float = RANK_TOL) -> OrthonormalBasis:
    """Orthonormal basis of the sum of the given subspaces."""
    d = bases[0].ambient_dim
    if any(b.ambient_dim != d for b in bases):
        raise DimensionMismatch("bases live in different ambient spaces")
    stacked = np.hstack([b.vectors for b in bases])
    if stacked.shape[1] == 0:
        return OrthonormalBasis.empty(d)
    return orthonormalize(stacked, tol)


def subspace_intersection(a: OrthonormalBasis, b: OrthonormalBasis, tol: float = RANK_TOL) -> OrthonormalBasis:
    """Basis of ``span(a) ∩ span(b)``.

    The singular values of ``A* B`` are the cosines of the principal angles;
    directions whose cosine is at least ``1 - tol`` are common to both.
    """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("bases live in different ambient spaces")
    if a.dim == 0 or b.dim == 0:
        return OrthonormalBasis.empty(a.ambient_dim)
    u, s, _ = np.linalg.svd(a.vectors.conj().T @ b.vectors)
    idx = np.flatnonzero(s >= 1.0 - tol)
    if idx.size == 0:
        return OrthonormalBasis.empty(a.ambient_dim)
    return orthonormalize(a.vectors @ u[:, idx], tol)


def principal_cosines(a: OrthonormalBasis, b: OrthonormalBasis) -> np.ndarray:
    """Cosines of the principal angles between two subspaces, descending."""
    if a.dim == 0 or b.dim == 0:
        return np.zeros(0)
    return np.linalg.svd(a.vectors.conj().T @ b.vectors, compute_uv=False)


def operator_norm(t: np.ndarray) -> float:
    """Largest singular value, as ``sqrt(lambda_max(T* T))``."""
    t = np.asarray(t, dtype=complex)
    if t.size == 0:
        return 0.0
    eig = hermitian_eig(t.conj().T @ t, tol=np.inf)
    return float(np.sqrt(max(eig.eigenvalues[-1], 0.0)))


@dataclass(frozen=True)
class ProjectionPair:
    """Two subspaces of C^d and their orthogonal projectors.

    ``p1`` is applied first: the product studied everywhere is ``p2 @ p1``.
    """

    basis1: OrthonormalBasis
    basis2: OrthonormalBasis
    p1: np.ndarray = field(init=False, repr=False)
    p2: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.basis1.ambient_dim != self.basis2.ambient_dim:
            raise DimensionMismatch("the two subspaces live in different ambient spaces")
        object.__setattr__(self, "p1", projector(self.basis1))
        object.__setattr__(self, "p2", projector(self.basis2))

    @classmethod
    def from_vectors(cls, vectors1, vectors2, tol: float = RANK_TOL) -> "ProjectionPair":
        """Build a pair from spanning families (they are orthonormalized)."""
        return cls(orthonormalize(vectors1, tol), orthonormalize(vectors2, tol))

    @property
    def dim(self) -> int:
        return self.basis1.ambient_dim

    @property
    def product(self) -> np.ndarray:
        """``T = P2 P1``."""
        return _frozen(self.p2 @ self.p1)

    @property
    def gram(self) -> np.ndarray:
        """``P1 P2 P1 = T* T``, Hermitian."""
        return _frozen(real_part(self.p1 @ self.p2 @ self.p1))

    def with_first_complemented(self, tol: float = RANK_TOL) -> "ProjectionPair":
        """The pair ``(M1^perp, M2)``, whose product is ``P2 (I - P1)``."""
        return ProjectionPair(orthogonal_complement(self.basis1, tol), self.basis2)

    def is_identity_pair(self) -> bool:
        return self.basis1.dim == self.dim and self.basis2.dim == self.dim


@dataclass(frozen=True)
class SubspaceDecomposition:
    """The five mutually orthogonal parts of C^d attached to a pair."""

    m1_cap_m2: OrthonormalBasis
    m1_cap_m2perp: OrthonormalBasis
    m1perp_cap_m2: OrthonormalBasis
    m1perp_cap_m2perp: OrthonormalBasis
    generic_part: OrthonormalBasis

    def parts(self) -> tuple[OrthonormalBasis, ...]:
        return (self.m1_cap_m2, self.m1_cap_m2perp, self.m1perp_cap_m2,
                self.m1perp_cap_m2perp, self.generic_part)

    def dims(self) -> tuple[int, ...]:
        return tuple(p.dim for p in self.parts())


def five_part_decomposition(pair: ProjectionPair, tol: float = RANK_TOL) -> SubspaceDecomposition:
    m1, m2 = pair.basis1, pair.basis2
    m1p = orthogonal_complement(m1, tol)
    m2p = orthogonal_complement(m2, tol)
    trivial = [
        subspace_intersection(m1, m2, tol),
        subspace_intersection(m1, m2p, tol),
        subspace_intersection(m1p, m2, tol),
        subspace_intersection(m1p, m2p, tol),
    ]
    covered = span_union(*trivial, tol=tol)
    generic = orthogonal_complement(covered, tol)
    return SubspaceDecomposition(*trivial, generic)


def restrict(pair: ProjectionPair, part: OrthonormalBasis) -> tuple[np.ndarray, np.ndarray]:
    """Compress both projectors to the subspace ``part`` (an invariant one)."""
    q = part.vectors
    return q.conj().T @ pair.p1 @ q, q.conj().T @ pair.p2 @ q


def max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a), initial=0.0))


def stack_columns(bases: Sequence[OrthonormalBasis]) -> np.ndarray:
    return np.hstack([b.vectors for b in bases])
