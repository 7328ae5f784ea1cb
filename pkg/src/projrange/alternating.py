"""Alternating projections and the slow/fast convergence dichotomy.

``(P2 P1)^n - P_{M1∩M2} = (P_{N2} P_{N1})^n`` with N_i = M_i ⊖ (M1 ∩ M2), and
``|(P_{N2} P_{N1})^n| = c^{2n-1}`` where c is the Friedrichs cosine. In finite
dimension c < 1 always holds after reduction, so convergence is linear; the
"arbitrarily slow" branch is only reachable as a tolerance surrogate.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ellipse import hull_contains, hull_support
from .errors import PreconditionError, ZeroInitialVector
from .linalg import (RANK_TOL, ProjectionPair, hermitian_eig, operator_norm,
                     orthonormalize, projector, subspace_intersection)
from .numrange import predicted_closure, sector_angle_from_cosine
from .spectral import EXACT_TOL, SpectrumSet, friedrichs_cosine


@dataclass(frozen=True)
class AlternatingRun:
    """Errors ``|(P2 P1)^n x0 - P_{M1∩M2} x0|`` for n = 0..n_max."""

    iterates: tuple
    predicted_rate: float
    intersection_dim: int
    x0_norm: float

    def bound(self, n: int) -> float:
        """``c^{2n-1} |x0|`` for n >= 1 (``|x0|`` at n = 0)."""
        c = np.sqrt(self.predicted_rate)
        return self.x0_norm if n == 0 else float(c ** (2 * n - 1) * self.x0_norm)

    @property
    def errors(self) -> np.ndarray:
        return np.array([e for _, e in self.iterates])


def reduce_pair(pair: ProjectionPair, tol: float = RANK_TOL) -> ProjectionPair:
    """The pair (N1, N2) obtained by removing M1 ∩ M2 from both subspaces."""
    inter = subspace_intersection(pair.basis1, pair.basis2, tol)
    q = np.eye(pair.dim) - projector(inter)
    b1 = orthonormalize(q @ pair.basis1.vectors, tol)
    b2 = orthonormalize(q @ pair.basis2.vectors, tol)
    return ProjectionPair(b1, b2)


def top_start_vector(pair: ProjectionPair) -> np.ndarray:
    """Unit eigenvector of P1 P2 P1 - P_{M1∩M2} for its largest eigenvalue.

    Starting there makes the error exactly ``c^{2n-1}``.
    """
    inter = subspace_intersection(pair.basis1, pair.basis2)
    eig = hermitian_eig(pair.gram - projector(inter))
    return eig.eigenvectors.vectors[:, -1].copy()


def alternating_iterate(pair: ProjectionPair, x0, n_max: int) -> AlternatingRun:
    x0 = np.asarray(x0, dtype=complex).ravel()
    if x0.size != pair.dim:
        raise ValueError(f"x0 has length {x0.size}, expected {pair.dim}")
    norm = float(np.linalg.norm(x0))
    if norm == 0.0:
        raise ZeroInitialVector("the initial vector must be nonzero")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    inter = subspace_intersection(pair.basis1, pair.basis2)
    limit = projector(inter) @ x0
    t = pair.product
    y = x0.copy()
    out = [(0, float(np.linalg.norm(y - limit)))]
    for n in range(1, n_max + 1):
        y = t @ y
        out.append((n, float(np.linalg.norm(y - limit))))
    c = friedrichs_cosine(pair)
    return AlternatingRun(tuple(out), c * c, inter.dim, norm)


def power_norms(pair: ProjectionPair, n_max: int) -> np.ndarray:
    """``|(P2 P1)^n|`` for n = 1..n_max."""
    t = pair.product
    p = np.eye(pair.dim, dtype=complex)
    out = []
    for _ in range(n_max):
        p = t @ p
        out.append(operator_norm(p))
    return np.array(out)


ITEM_LABELS = {
    1: "slow convergence (surrogate: |P2P1| = 1 within tol)",
    2: "|P2P1| = 1",
    3: "N1^perp + N2^perp not closed (vacuous in finite dimension)",
    4: "1 in spectrum",
    5: "Friedrichs cosine = 1",
    6: "1 in closure of the numerical range",
    7: "spectrum accumulates at 1 (surrogate: max eigenvalue >= 1 - tol)",
    8: "fast-convergence witness: sector angle < pi/6",
}


@dataclass(frozen=True)
class DichotomyReport:
    """Items 1..8 as ``{item: (flag, witness)}``.

    Items 1, 2, 4, 5, 6, 7 flag the slow regime; item 3 is always False in
    finite dimension and left out of the agreement check; item 8 witnesses the
    fast regime, so it must equal the negation of the others.
    """

    items: dict = field(default_factory=dict)
    consistent: bool = True

    @property
    def slow(self) -> bool:
        return self.items[2][0]

    def labels(self) -> dict:
        return dict(ITEM_LABELS)


def dichotomy_report(pair: ProjectionPair, tol: float = 1e-9) -> DichotomyReport:
    """Evaluate the equivalent characterizations of slow convergence.

    The pair must already have trivial intersection (pass the reduced pair,
    see :func:`reduce_pair`); an exact common direction is rejected with
    :class:`PreconditionError`. Near-common directions (principal cosine
    within 1e-13 of 1 is treated as exact) are kept, which is what lets the
    slow flags switch on through the tolerance.
    """
    if subspace_intersection(pair.basis1, pair.basis2, EXACT_TOL).dim:
        raise PreconditionError("N1 ∩ N2 must be trivial; reduce the pair first")
    t = pair.product
    raw = np.clip(hermitian_eig(pair.gram).eigenvalues, 0.0, 1.0)
    top = float(raw[-1]) if raw.size else 0.0
    norm = operator_norm(t)
    c = friedrichs_cosine(pair, tol=EXACT_TOL)
    spec = SpectrumSet.from_values(raw)
    hull = predicted_closure(spec)
    in_closure = hull_contains(hull, 1.0 + 0j, tol=tol)
    angle = sector_angle_from_cosine(c)
    items = {
        1: (norm >= 1.0 - tol, norm),
        2: (norm >= 1.0 - tol, norm),
        3: (False, None),
        4: (top >= 1.0 - tol, top),
        5: (c >= 1.0 - tol, c),
        6: (in_closure, float(hull_support(hull, 0.0))),
        7: (top >= 1.0 - tol, top),
        8: (angle < np.pi / 6 - tol, angle),
    }
    slow = [items[k][0] for k in (1, 2, 4, 5, 6, 7)]
    consistent = all(s == slow[0] for s in slow) and items[8][0] == (not slow[0])
    return DichotomyReport(items, consistent)

