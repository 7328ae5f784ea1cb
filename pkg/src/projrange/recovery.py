"""Reading the spectrum of P2 P1 back off its numerical range, and the radii.

For α in [π/3, π] the closure of W(P2 P1) touches the line
``Re(z e^{-iα}) = 1/(4(1 - cos α))`` exactly when λ_α = 1/(2(1 - cos α)) is in
the spectrum, so the gap ``D(α) = 1/(4(1 - cos α)) - F(α)`` vanishes (with a
double root) precisely at the angles of spectral values in [1/4, 1]. Values
below 1/4 are invisible from W(P2 P1) and are read off W(P2(I - P1))
instead, through λ ↦ 1 - λ.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ellipse import SupportProfile, lambda_alpha
from .errors import InsufficientSampling
from .linalg import ProjectionPair, operator_norm, real_part
from .numrange import numerical_radius, support_slope, support_values, trace_boundary
from .spectral import SpectrumSet, complement_map, friedrichs_cosine, product_spectrum

LOWER, UPPER = np.pi / 3, np.pi
RECOVERY_GRID = 1024
RECOVERY_TOL = 1e-6

# Largest spacing tolerated on [π/3, π].
MAX_SPACING = np.pi / 256


def recovery_profile(t: np.ndarray, grid: int = RECOVERY_GRID) -> SupportProfile:
    """Support function of W(T) sampled on ``grid`` points of [π/3, π]."""
    alphas = np.linspace(LOWER, UPPER, grid)
    return SupportProfile(alphas, support_values(t, alphas), operator=np.asarray(t, dtype=complex))


def _target(alpha):
    return 1.0 / (4.0 * (1.0 - np.cos(alpha)))


def _target_slope(alpha):
    return -np.sin(alpha) / (4.0 * (1.0 - np.cos(alpha)) ** 2)


def _window(profile: SupportProfile):
    a, f = profile.alphas, profile.values
    keep = (a >= LOWER - 1e-12) & (a <= UPPER + 1e-12)
    a, f = a[keep], f[keep]
    if a.size < 3:
        raise InsufficientSampling("fewer than three samples in [π/3, π]")
    edges = np.concatenate([[a[0] - LOWER], np.diff(a), [UPPER - a[-1]]])
    if np.max(edges) > MAX_SPACING:
        raise InsufficientSampling(f"grid spacing {np.max(edges):.3g} exceeds π/256 on [π/3, π]")
    return np.clip(a, LOWER, UPPER), f


def _refine_exact(t: np.ndarray, lo: float, hi: float, iters: int = 60) -> float:
    """Bisection on D'(α) = S'(α) - F'(α) over [lo, hi], or the better endpoint
    when D' does not change sign there."""

    def slope(a):
        return _target_slope(a) - support_slope(t, a)[1]

    def gap(a):
        return _target(a) - support_slope(t, a)[0]

    s_lo, s_hi = slope(lo), slope(hi)
    if not (s_lo <= 0.0 <= s_hi):
        return lo if gap(lo) <= gap(hi) else hi
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if slope(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    return 0.5 * (lo + hi)


def _refine_parabolic(a: np.ndarray, d: np.ndarray, k: int) -> tuple[float, float]:
    if k == 0 or k == a.size - 1:
        return float(a[k]), float(d[k])
    x0, x1, x2 = a[k - 1:k + 2]
    y0, y1, y2 = d[k - 1:k + 2]
    den = (x0 - x1) * (x0 - x2) * (x1 - x2)
    A = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / den
    B = (x2 ** 2 * (y0 - y1) + x1 ** 2 * (y2 - y0) + x0 ** 2 * (y1 - y2)) / den
    if A <= 0:
        return float(x1), float(y1)
    xv = -B / (2 * A)
    xv = min(max(xv, x0), x2)
    C = y1 - A * x1 ** 2 - B * x1
    return float(xv), float(A * xv ** 2 + B * xv + C)


def recover_upper_spectrum(profile: SupportProfile, tol: float = RECOVERY_TOL) -> SpectrumSet:
    """Spectral values in [1/4, 1] detected as zeros of D on [π/3, π].

    Local minima of D on the grid are refined (bisection on D' when the
    profile carries its operator, parabolic interpolation otherwise) and kept
    when D at the refined angle is at most ``tol``.
    """
    a, f = _window(profile)
    d = _target(a) - f
    t = profile.operator
    found = []
    n = a.size
    for k in range(n):
        left = d[k - 1] if k > 0 else np.inf
        right = d[k + 1] if k < n - 1 else np.inf
        if not (d[k] <= left and d[k] <= right):
            continue
        if d[k] > tol + 1e-2:
            continue
        if t is not None:
            alpha = _refine_exact(t, a[max(k - 1, 0)], a[min(k + 1, n - 1)])
            value = _target(alpha) - support_slope(t, alpha)[0]
        else:
            alpha, value = _refine_parabolic(a, d, k)
        if value <= tol:
            found.append(lambda_alpha(float(np.clip(alpha, LOWER, UPPER))))
    return SpectrumSet.from_values(found)


def full_recovery(pair: ProjectionPair, grid: int = RECOVERY_GRID, tol: float = RECOVERY_TOL) -> SpectrumSet:
    """σ(P2 P1) rebuilt from the closures of W(P2 P1) and W(P2(I - P1)).

    The upper route gives σ ∩ [1/4, 1], the complement route σ ∩ [0, 3/4]
    (through 1 - λ), and 0 is present unless W(P2 P1) = {1}, i.e. unless
    F(π) = -1.
    """
    t = pair.product
    upper = recover_upper_spectrum(recovery_profile(t, grid), tol)
    comp = pair.with_first_complemented().product
    lower = complement_map(recover_upper_spectrum(recovery_profile(comp, grid), tol))
    values = list(upper.values) + list(lower.values)
    if support_values(t, [np.pi])[0] > -0.5:
        values.append(0.0)
    return SpectrumSet.from_values(values, dedup_tol=tol)


def real_part_radius(t: np.ndarray, alpha: float) -> float:
    """Spectral radius of the Hermitian ``Re(e^{-iα} T)``."""
    w = np.linalg.eigvalsh(real_part(np.exp(-1j * alpha) * np.asarray(t, dtype=complex)))
    return float(np.max(np.abs(w))) if w.size else 0.0


@dataclass(frozen=True)
class RadiiReport:
    spectral_radius: float
    numerical_radius: float
    predicted_numerical_radius: float
    kittaneh_bound: float
    friedrichs_cosine: float
    trivial_intersection: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def radii_report(pair: ProjectionPair, grid: int = 1024) -> RadiiReport:
    """Spectral and numerical radii of P2 P1 with the predicted value
    ``(r + sqrt(r)) / 2`` and the bound ``(|T| + |T²|^{1/2}) / 2``."""
    t = pair.product
    spec = product_spectrum(pair)
    r = spec.max()
    boundary = trace_boundary(t, grid)
    w = max(float(np.max(np.abs(boundary.points))), numerical_radius(t, grid))
    kitt = 0.5 * (operator_norm(t) + np.sqrt(operator_norm(t @ t)))
    return RadiiReport(
        spectral_radius=r,
        numerical_radius=w,
        predicted_numerical_radius=float(0.5 * (r + np.sqrt(r))),
        kittaneh_bound=float(kitt),
        friedrichs_cosine=friedrichs_cosine(pair),
        trivial_intersection=not spec.contains(1.0, 1e-12),
    )
