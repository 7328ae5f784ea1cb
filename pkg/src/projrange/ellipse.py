"""The ellipse family E(λ) and support functions of planar convex sets.

E(λ), for λ in [0, 1], is the closed region bounded by the ellipse with foci
0 and λ and minor axis length sqrt(λ(1-λ)). E(0) = {0} and E(1) = [0, 1] are
degenerate; the support and boundary formulas stay valid for them pointwise,
only membership needs explicit cases.

The support function of a bounded convex set S at angle α is
``F(α) = sup{Re(z e^{-iα}) : z in S}``. Angles are reduced mod 2π.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import EmptyHull, OutOfDomain

TWO_PI = 2.0 * np.pi

#: Default α-grid for hull membership.
MEMBERSHIP_GRID = 2048


def _check_lambda(lam):
    lam = np.asarray(lam, dtype=float)
    if np.any(lam < 0.0) or np.any(lam > 1.0):
        raise OutOfDomain("λ must lie in [0, 1]")
    return lam


def boundary_point(lam, t):
    """Point of the boundary of E(λ) with parameter ``t`` (vectorized)."""
    lam = _check_lambda(lam)
    x = 0.5 * np.sqrt(lam) * np.cos(t) + 0.5 * lam
    y = 0.5 * np.sqrt(lam * (1.0 - lam)) * np.sin(t)
    return x + 1j * y


def ellipse_support(lam, alpha):
    """``g_α(λ) = ½(λ cos α + sqrt(λ(1 - λ sin²α)))``, broadcasting."""
    lam = np.asarray(lam, dtype=float)
    s2 = np.sin(alpha) ** 2
    return 0.5 * (np.cos(alpha) * lam + np.sqrt(np.clip(lam * (1.0 - s2 * lam), 0.0, None)))


def support_point(lam, alpha):
    """The point of E(λ) where the support line of angle α touches it."""
    lam = _check_lambda(lam)
    t = np.arctan2(np.sqrt(1.0 - lam) * np.sin(alpha), np.cos(alpha))
    return boundary_point(lam, t)


def ellipse_contains(lam: float, z: complex, tol: float = 1e-9) -> bool:
    """Whether ``z`` lies in E(λ), up to ``tol``."""
    lam = float(_check_lambda(lam))
    x, y = z.real, z.imag
    if lam <= tol:
        return abs(z) <= tol
    if lam >= 1.0 - tol:
        return abs(y) <= tol and -tol <= x <= 1.0 + tol
    q = (x - lam / 2) ** 2 / (lam / 4) + y ** 2 / (lam * (1 - lam) / 4)
    return bool(q <= 1.0 + tol)


@dataclass(frozen=True)
class SupportProfile:
    """Samples ``(α_k, F(α_k))`` of a support function, α strictly increasing.

    ``operator`` optionally records the matrix whose numerical range the
    profile describes, so that consumers can evaluate F (and its derivative)
    at angles between the samples.
    """

    alphas: np.ndarray
    values: np.ndarray
    operator: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        a = np.array(self.alphas, dtype=float)
        v = np.array(self.values, dtype=float)
        if a.shape != v.shape or a.ndim != 1:
            raise ValueError("alphas and values must be 1-D arrays of equal length")
        if a.size > 1 and np.any(np.diff(a) <= 0):
            raise ValueError("alphas must be strictly increasing")
        a.flags.writeable = False
        v.flags.writeable = False
        object.__setattr__(self, "alphas", a)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.alphas.size


@dataclass(frozen=True)
class EllipseHull:
    """Convex hull of the ellipses E(λ) for λ in ``lambdas``.

    ``identity`` marks the single case P1 = P2 = I, where the numerical range
    is the point {1} and not E(1) = [0, 1].
    """

    lambdas: tuple
    identity: bool = False

    def __post_init__(self):
        lam = sorted(float(x) for x in np.atleast_1d(self.lambdas))
        if not lam:
            raise EmptyHull("an ellipse hull needs at least one λ")
        _check_lambda(lam)
        dedup = [lam[0]]
        for x in lam[1:]:
            if x - dedup[-1] > 1e-12:
                dedup.append(x)
        object.__setattr__(self, "lambdas", tuple(dedup))


def hull_support(h: EllipseHull, alpha):
    """Support function of the hull: max over its ellipses (vectorized in α)."""
    if not h.lambdas:
        raise EmptyHull("empty hull")
    alpha = np.asarray(alpha, dtype=float)
    if h.identity:
        return np.cos(alpha)
    lam = np.asarray(h.lambdas)
    vals = ellipse_support(lam.reshape((-1,) + (1,) * alpha.ndim), alpha)
    return np.max(vals, axis=0)


def uniform_angles(grid: int) -> np.ndarray:
    return TWO_PI * np.arange(grid) / grid


def membership_slack(grid: int) -> float:
    """Worst-case distance by which a point accepted by the grid test can lie
    outside the set, for sets inside the unit disk: the outer polygon of
    ``grid`` support lines sits within ``sec(π/grid) - 1`` of the set."""
    return 1.0 / np.cos(np.pi / grid) - 1.0


def hull_contains_many(h: EllipseHull, zs, grid: int = MEMBERSHIP_GRID, tol: float = 1e-9,
                       chunk: int = 4096) -> np.ndarray:
    """Vectorized :func:`hull_contains` over an array of points."""
    if grid < 8:
        raise ValueError("grid must be at least 8")
    alphas = uniform_angles(grid)
    bound = hull_support(h, alphas) + tol
    rot = np.exp(-1j * alphas)
    zs = np.atleast_1d(np.asarray(zs, dtype=complex))
    out = np.empty(zs.shape, dtype=bool)
    flat, res = zs.ravel(), out.ravel()
    for start in range(0, flat.size, chunk):
        block = flat[start:start + chunk]
        proj = (block[:, None] * rot[None, :]).real
        res[start:start + chunk] = np.all(proj <= bound[None, :], axis=1)
    return out


def hull_contains(h: EllipseHull, z: complex, grid: int = MEMBERSHIP_GRID, tol: float = 1e-9) -> bool:
    """Grid test ``Re(z e^{-iα}) <= F(α) + tol`` on a uniform α-grid.

    The test is exact for points inside; a point accepted may lie outside by
    at most :func:`membership_slack` plus ``tol`` (about 1.2e-6 for the
    default grid of 2048).
    """
    return bool(hull_contains_many(h, [z], grid, tol)[0])


def _fold_angle(alpha):
    a = np.mod(alpha, TWO_PI)
    return np.where(a > np.pi, TWO_PI - a, a)


def full_region_support(alpha):
    """Support function of the closed convex hull of all E(λ), λ in [0, 1]."""
    a = _fold_angle(np.asarray(alpha, dtype=float))
    with np.errstate(divide="ignore"):
        upper = 1.0 / (4.0 * (1.0 - np.cos(a)))
    out = np.where(a <= np.pi / 3, np.cos(a), upper)
    return float(out) if out.ndim == 0 else out


def full_region_support_point(alpha):
    """Support point of the full region: 1 on the flat angles, else the
    touching point of E(λ_α)."""
    a = np.asarray(alpha, dtype=float)
    folded = _fold_angle(a)
    lam = np.where(folded <= np.pi / 3, 1.0, 1.0 / (2.0 * (1.0 - np.cos(np.maximum(folded, np.pi / 3)))))
    return support_point(np.clip(lam, 0.0, 1.0), a)


_SLACK = 1e-12


def lambda_alpha(alpha: float) -> float:
    """The unique critical point ``1 / (2(1 - cos α))`` of g_α, α in [π/3, π]."""
    if not (np.pi / 3 - _SLACK <= alpha <= np.pi + _SLACK):
        raise OutOfDomain("α must lie in [π/3, π]")
    return float(1.0 / (2.0 * (1.0 - np.cos(alpha))))


def alpha_lambda(lam: float) -> float:
    """Inverse of :func:`lambda_alpha`: ``arccos(1 - 1/(2λ))`` for λ in [¼, 1]."""
    if not (0.25 - _SLACK <= lam <= 1.0 + _SLACK):
        raise OutOfDomain("λ must lie in [1/4, 1]")
    return float(np.arccos(np.clip(1.0 - 1.0 / (2.0 * lam), -1.0, 1.0)))
