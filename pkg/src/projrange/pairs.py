"""Ready-made projection pairs: two planar lines and seeded random pairs."""
from __future__ import annotations

import numpy as np

from .linalg import OrthonormalBasis, ProjectionPair, orthonormalize


def make_rng(seed: int) -> np.random.Generator:
    """The package-wide generator: PCG64 (64-bit output permuted congruential)."""
    return np.random.Generator(np.random.PCG64(seed))


def two_lines(theta: float) -> ProjectionPair:
    """Lines of C^2 spanned by ``e1`` and ``(cos θ, sin θ)``.

    The product is ``[[cos²θ, 0], [cosθ sinθ, 0]]``.
    """
    b1 = OrthonormalBasis(np.array([[1.0], [0.0]], dtype=complex))
    b2 = OrthonormalBasis(np.array([[np.cos(theta)], [np.sin(theta)]], dtype=complex))
    return ProjectionPair(b1, b2)


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_pair(seed: int, dim: int, dim1: int, dim2: int, shared: int = 0,
                only1: int = 0, only2: int = 0) -> ProjectionPair:
    """A seeded random pair with optionally planted trivial parts.

    ``shared`` directions lie in M1 ∩ M2, ``only1`` in M1 ∩ M2^perp and
    ``only2`` in M1^perp ∩ M2. The remaining ``dim1 - shared - only1`` and
    ``dim2 - shared - only2`` dimensions of each subspace are drawn uniformly
    at random inside the orthogonal complement of the planted part.
    """
    planted = shared + only1 + only2
    free1, free2 = dim1 - shared - only1, dim2 - shared - only2
    if min(free1, free2, shared, only1, only2) < 0 or planted > dim:
        raise ValueError("inconsistent dimensions for random_pair")
    rest = dim - planted
    if free1 > rest or free2 > rest:
        raise ValueError("free parts do not fit in the remaining space")
    rng = make_rng(seed)
    u = random_unitary(rng, dim)
    common = u[:, :shared]
    m1_only = u[:, shared:shared + only1]
    m2_only = u[:, shared + only1:planted]
    remaining = u[:, planted:]

    def _free(k):
        if k == 0:
            return np.zeros((dim, 0), dtype=complex)
        x = rng.standard_normal((rest, k)) + 1j * rng.standard_normal((rest, k))
        return remaining @ orthonormalize(x).vectors

    b1 = np.hstack([common, m1_only, _free(free1)])
    b2 = np.hstack([common, m2_only, _free(free2)])
    return ProjectionPair(orthonormalize(b1), orthonormalize(b2))


def random_pair_family(seed: int, count: int, max_dim: int = 20) -> list[ProjectionPair]:
    """``count`` structurally varied random pairs with ``2 <= d <= max_dim``.

    Roughly half the pairs are in generic position; the rest carry planted
    intersections of every kind.
    """
    rng = make_rng(seed)
    pairs = []
    for i in range(count):
        d = int(rng.integers(2, max_dim + 1))
        if i % 2 == 0:
            shared = only1 = only2 = 0
        else:
            shared = int(rng.integers(0, d // 3 + 1))
            only1 = int(rng.integers(0, (d - shared) // 3 + 1))
            only2 = int(rng.integers(0, (d - shared - only1) // 3 + 1))
        rest = d - shared - only1 - only2
        free1 = int(rng.integers(0, rest + 1))
        free2 = int(rng.integers(0, rest + 1))
        if shared + only1 + free1 == 0:
            free1 = min(1, rest) or 0
        pairs.append(random_pair(int(rng.integers(0, 2**31)), d,
                                 shared + only1 + free1, shared + only2 + free2,
                                 shared, only1, only2))
    return pairs
