"""Spectrum of P2 P1, the Friedrichs angle and prescribed-spectrum pairs.

In finite dimension σ(P2 P1) is the eigenvalue set of the Hermitian
P1 P2 P1 (the two agree off 0, and both are singular together), so every
spectrum here comes from a Hermitian eigensolver.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ConsistencyError, DimensionBudgetExceeded, OutOfDomain, SpectrumWithoutZero
from .linalg import (RANK_TOL, OrthonormalBasis, ProjectionPair, hermitian_eig, orthonormalize,
                     principal_cosines, projector, subspace_intersection)

#: Default merge tolerance for eigenvalue clusters.
DEDUP_TOL = 1e-7

# Eigenvalues this close to 0 or 1 are rounding noise; snapping them matters
# because g_α(λ) grows like sqrt(λ) near 0.
SNAP_TOL = 1e-12

# Stricter than RANK_TOL: distinguishes an exact intersection from an
# eigenvalue merely close to 1 (e.g. 1 - 1e-12).
EXACT_TOL = 1e-13


@dataclass(frozen=True)
class SpectrumSet:
    """Sorted distinct values in [0, 1] with multiplicities."""

    values: tuple
    multiplicities: tuple
    dedup_tol: float = DEDUP_TOL

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        mult = tuple(int(m) for m in self.multiplicities)
        if len(vals) != len(mult):
            raise ValueError("values and multiplicities differ in length")
        if any(m < 1 for m in mult):
            raise ValueError("multiplicities must be positive")
        if any(b - a <= self.dedup_tol for a, b in zip(vals, vals[1:])):
            raise ValueError("values must be increasing with gaps larger than dedup_tol")
        if vals and (vals[0] < 0.0 or vals[-1] > 1.0):
            raise ValueError("spectral values must lie in [0, 1]")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "multiplicities", mult)

    @classmethod
    def from_values(cls, values: Iterable[float], dedup_tol: float = DEDUP_TOL,
                    multiplicities: Iterable[int] | None = None) -> "SpectrumSet":
        """Cluster raw values (chained gaps <= dedup_tol) into a spectrum.

        Values are clipped to [0, 1] and snapped to 0 or 1 when within
        ``SNAP_TOL``. A cluster is represented by its mean unless it holds an
        exact 0 or 1.
        """
        raw = np.clip(np.asarray(list(values), dtype=float), 0.0, 1.0)
        weights = (np.ones(raw.size, dtype=int) if multiplicities is None
                   else np.asarray(list(multiplicities), dtype=int))
        raw = np.where(raw <= SNAP_TOL, 0.0, raw)
        raw = np.where(raw >= 1.0 - SNAP_TOL, 1.0, raw)
        order = np.argsort(raw, kind="stable")
        raw, weights = raw[order], weights[order]
        vals, mult = [], []
        start = 0
        for i in range(1, raw.size + 1):
            if i == raw.size or raw[i] - raw[i - 1] > dedup_tol:
                cluster, w = raw[start:i], weights[start:i]
                if np.any(cluster == 0.0):
                    rep = 0.0
                elif np.any(cluster == 1.0):
                    rep = 1.0
                else:
                    rep = float(np.average(cluster, weights=w))
                vals.append(rep)
                mult.append(int(w.sum()))
                start = i
        return cls(tuple(vals), tuple(mult), dedup_tol)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def contains(self, x: float, tol: float | None = None) -> bool:
        tol = self.dedup_tol if tol is None else tol
        return any(abs(v - x) <= tol for v in self.values)

    def max(self) -> float:
        return self.values[-1] if self.values else 0.0

    def matches(self, other: Iterable[float], tol: float) -> bool:
        """Same value set up to ``tol`` in both directions."""
        other = list(other)
        return (all(any(abs(a - b) <= tol for b in other) for a in self.values)
                and all(any(abs(a - b) <= tol for a in self.values) for b in other))


def product_spectrum(pair: ProjectionPair, tol: float = DEDUP_TOL) -> SpectrumSet:
    """σ(P2 P1) with multiplicities taken from P1 P2 P1."""
    eig = hermitian_eig(pair.gram)
    return SpectrumSet.from_values(eig.eigenvalues, tol)


def _friedrichs_spectral(pair: ProjectionPair, inter: OrthonormalBasis) -> float:
    h = pair.gram - projector(inter)
    top = hermitian_eig(h).eigenvalues[-1]
    return float(np.sqrt(top)) if top > SNAP_TOL else 0.0


def _friedrichs_angles(pair: ProjectionPair, inter: OrthonormalBasis, tol: float) -> float:
    q = np.eye(pair.dim) - projector(inter)
    n1 = q @ pair.basis1.vectors
    n2 = q @ pair.basis2.vectors
    if n1.shape[1] == 0 or n2.shape[1] == 0:
        return 0.0
    cos = principal_cosines(orthonormalize(n1, tol), orthonormalize(n2, tol))
    return float(cos[0]) if cos.size else 0.0


def friedrichs_cosine(pair: ProjectionPair, tol: float = RANK_TOL, check: bool = True) -> float:
    """cos(M1, M2), the Friedrichs angle cosine.

    Computed as ``sqrt(λ_max(P1 P2 P1 - P_{M1∩M2}))`` and, when ``check`` is
    set, compared with the largest principal cosine between M1 ⊖ M and
    M2 ⊖ M (M the intersection); a disagreement above 1e-9 raises
    :class:`ConsistencyError`.
    """
    inter = subspace_intersection(pair.basis1, pair.basis2, tol)
    c = _friedrichs_spectral(pair, inter)
    if check:
        c2 = _friedrichs_angles(pair, inter, tol)
        if abs(c - c2) > 1e-9:
            raise ConsistencyError(f"Friedrichs cosine: spectral {c!r} vs principal angles {c2!r}")
    return c


def intersection_is_trivial(pair: ProjectionPair, tol: float = EXACT_TOL) -> bool:
    return subspace_intersection(pair.basis1, pair.basis2, tol).dim == 0


def construct_pair(k: Iterable[float], dim_budget: int | None = None) -> ProjectionPair:
    """Two projections whose product has spectrum exactly ``k``.

    Each nonzero λ = cos²θ in ``k`` gets its own plane span{e_{2n}, e_{2n+1}}
    holding the lines h = e_{2n} (in M1) and cos θ e_{2n} + sin θ e_{2n+1}
    (in M2). Unused coordinates of the ``dim_budget``-dimensional space are
    orthogonal to both subspaces. ``k`` must contain 0; the one exception is
    k = {1}, realized by P1 = P2 = I.
    """
    ks = [float(x) for x in k]
    if not ks:
        raise SpectrumWithoutZero("empty spectrum")
    if any(x < 0.0 or x > 1.0 for x in ks):
        raise OutOfDomain("prescribed spectral values must lie in [0, 1]")
    if all(x == 1.0 for x in ks):
        d = dim_budget or 1
        eye = OrthonormalBasis(np.eye(d, dtype=complex))
        return ProjectionPair(eye, eye)
    if not any(x == 0.0 for x in ks):
        raise SpectrumWithoutZero("0 must belong to the spectrum of a product of two "
                                  "projections unless both are the identity")
    nonzero = sorted({x for x in ks if x > 0.0})
    needed = 2 * len(nonzero)
    d = dim_budget if dim_budget is not None else max(1, needed)
    if needed > d:
        raise DimensionBudgetExceeded(f"{len(nonzero)} blocks need dimension {needed}, budget is {d}")
    b1 = np.zeros((d, len(nonzero)), dtype=complex)
    b2 = np.zeros((d, len(nonzero)), dtype=complex)
    for n, lam in enumerate(nonzero):
        b1[2 * n, n] = 1.0
        b2[2 * n, n] = np.sqrt(lam)
        b2[2 * n + 1, n] = np.sqrt(1.0 - lam)
    return ProjectionPair(OrthonormalBasis(b1), OrthonormalBasis(b2))


def complement_map(spec_complement: SpectrumSet) -> SpectrumSet:
    """Map σ(P2(I - P1)) to values certainly in σ(P2 P1): λ ≠ 0 ↦ 1 - λ."""
    vals = [1.0 - v for v in spec_complement.values if v > spec_complement.dedup_tol]
    return SpectrumSet.from_values(vals, spec_complement.dedup_tol)
