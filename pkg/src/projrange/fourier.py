"""Annihilating pairs for the N-point discrete Fourier transform.

P_S = diag(1_S) cuts a signal to the index set S and P_Σ = F* diag(1_Σ) F
cuts its spectrum to Σ. (S, Σ) is annihilating when no nonzero signal is
fixed by both, and strongly annihilating when |P_S P_Σ| < 1. In finite
dimension the two notions coincide, and every strong-pair criterion reduces
to a statement about the two projections.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from .errors import IndexOutOfRange
from .linalg import OrthonormalBasis, ProjectionPair, operator_norm, subspace_intersection
from .numrange import (measured_sector_angle, numerical_radius, rotated_real_parts,
                       sector_angle_from_cosine, support_operator, trace_boundary)
from .spectral import friedrichs_cosine, product_spectrum

STRONG_CRITERIA = ("d", "e", "f", "g", "h", "k")


def dft_matrix(n: int) -> np.ndarray:
    """Unitary DFT: entries ``exp(-2πi jk/N) / sqrt(N)``."""
    if n < 1:
        raise ValueError("N must be at least 1")
    j = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(j, j) / n) / np.sqrt(n)


def _indices(idx: Iterable[int], n: int) -> tuple:
    out = tuple(sorted({int(i) for i in idx}))
    if out and (out[0] < 0 or out[-1] >= n):
        raise IndexOutOfRange(f"indices must lie in 0..{n - 1}")
    return out


def fourier_pair(s: Iterable[int], sigma: Iterable[int], n: int) -> ProjectionPair:
    """The pair with P1 = P_Σ and P2 = P_S, so that P2 P1 = P_S P_Σ."""
    s, sigma = _indices(s, n), _indices(sigma, n)
    f = dft_matrix(n)
    b_s = OrthonormalBasis.standard(n, s)
    # Columns of F* are the Fourier modes; P_Σ projects onto the modes in Σ.
    b_sigma = OrthonormalBasis(f.conj().T[:, list(sigma)])
    return ProjectionPair(b_sigma, b_s)


@dataclass(frozen=True)
class AnnihilationReport:
    s_indices: tuple
    sigma_indices: tuple
    n: int
    norm_psp: float
    numerical_radius: float
    spectral_radius: float
    strong: bool
    weak: bool
    sector_theta: Optional[float]
    criteria: dict = field(default_factory=dict)
    alpha_margins: tuple = ()
    consistent: bool = True

    def as_dict(self) -> dict:
        return {
            "N": self.n,
            "s_indices": list(self.s_indices),
            "sigma_indices": list(self.sigma_indices),
            "norm_psp": self.norm_psp,
            "numerical_radius": self.numerical_radius,
            "spectral_radius": self.spectral_radius,
            "strong": self.strong,
            "weak": self.weak,
            "sector_theta": self.sector_theta,
            "criteria": dict(self.criteria),
            "consistent": self.consistent,
        }


def annihilation_check(s: Iterable[int], sigma: Iterable[int], n: int, tol: float = 1e-9,
                       grid: int = 128, alpha_grid: int = 33) -> AnnihilationReport:
    """Evaluate the strong-pair criteria for (S, Σ) and check they agree.

    d: |P_S P_Σ| < 1, e: r(P_S P_Σ) < 1, f: 1 not in the spectrum,
    g: 1 not in the closure of W (support at angle 0 below 1), h: w < 1,
    k: W lies in a sector at 1 of half-angle below π/6, minus the point 1.
    Items i and j (margins ``cos α - w(Re(e^{-iα} P_S P_Σ))`` over
    [0, π/3]) are reported too and included in the agreement check.
    """
    pair = fourier_pair(s, sigma, n)
    t = pair.product
    norm = operator_norm(t)
    spec = product_spectrum(pair)
    r = spec.max()
    w = numerical_radius(t, 64)
    f0 = support_operator(t, 0.0)
    boundary = trace_boundary(t, grid)
    measured = measured_sector_angle(boundary)
    alphas = np.linspace(0.0, np.pi / 3, alpha_grid)
    eigs = np.linalg.eigvalsh(rotated_real_parts(t, alphas))
    margins = tuple(float(m) for m in np.cos(alphas) - np.max(np.abs(eigs), axis=1))
    crit = {
        "d": norm < 1.0 - tol,
        "e": r < 1.0 - tol,
        "f": not spec.contains(1.0, tol),
        "g": f0 < 1.0 - tol,
        "h": w < 1.0 - tol,
        "k": measured < np.pi / 6 - tol and not f0 >= 1.0 - tol,
        "i": min(margins) > tol,
        "j": max(margins) > tol,
    }
    strong = crit["e"]
    weak = subspace_intersection(pair.basis1, pair.basis2).dim == 0
    consistent = all(v == strong for v in crit.values()) and (weak == strong)
    theta = sector_angle_from_cosine(friedrichs_cosine(pair)) if strong else None
    return AnnihilationReport(
        s_indices=_indices(s, n), sigma_indices=_indices(sigma, n), n=n,
        norm_psp=norm, numerical_radius=w, spectral_radius=r,
        strong=strong, weak=weak, sector_theta=theta, criteria=crit,
        alpha_margins=margins, consistent=consistent,
    )


def subsets_up_to(n: int, k: int):
    for size in range(k + 1):
        yield from combinations(range(n), size)


def _canonical(idx: tuple, n: int) -> tuple:
    if not idx:
        return idx
    return min(tuple(sorted((i - a) % n for i in idx)) for a in idx)


def translation_classes(n: int, k: int) -> list[tuple]:
    """One representative per class of index sets of size <= k under cyclic shifts.

    Shifting S conjugates P_S by a translation that commutes with P_Σ, and
    shifting Σ conjugates P_Σ by a modulation that commutes with P_S, so
    every criterion is constant on (shift-class of S) x (shift-class of Σ).
    """
    return sorted({_canonical(c, n) for c in subsets_up_to(n, k)}, key=lambda c: (len(c), c))
