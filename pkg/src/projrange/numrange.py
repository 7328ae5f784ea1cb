"""Closure of the numerical range of T = P2 P1, computed two ways.

The direct route sweeps the support function ``F(α) = λ_max(Re(e^{-iα} T))``
and the matching support points; the predicted route is the convex hull of
the ellipses E(λ) over the spectrum. A seeded Monte-Carlo sampler of
``<Tx, x>`` provides an inner witness. Localization helpers (rectangle and
sector at 1) and the 2x2 block form of the generic part live here too.

In finite dimension W(T) is compact, hence closed; every set handled here
is the closure.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from ._parallel import map_chunks
from .ellipse import EllipseHull, uniform_angles
from .errors import BlockResidualExceeded, EmptySpectrum
from .linalg import (RANK_TOL, ProjectionPair, five_part_decomposition, hermitian_eig,
                     real_part)
from .pairs import make_rng
from .spectral import SpectrumSet, friedrichs_cosine

TRACE_GRID = 1024


def rotated_real_parts(t: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    """Stack of ``Re(e^{-iα} T)`` for every α."""
    rot = np.exp(-1j * np.asarray(alphas))[:, None, None]
    return real_part(rot * np.asarray(t)[None, :, :])


def support_values(t: np.ndarray, alphas) -> np.ndarray:
    """Vectorized :func:`support_operator`."""
    alphas = np.atleast_1d(np.asarray(alphas, dtype=float))
    t = np.asarray(t, dtype=complex)
    return map_chunks(lambda a: np.linalg.eigvalsh(rotated_real_parts(t, a))[:, -1], alphas)


def support_operator(t: np.ndarray, alpha: float) -> float:
    """Support function of W(T) at angle α: ``λ_max(Re(e^{-iα} T))``."""
    h = real_part(np.exp(-1j * alpha) * np.asarray(t, dtype=complex))
    return float(hermitian_eig(h).eigenvalues[-1])


def support_slope(t: np.ndarray, alpha: float) -> tuple[float, float]:
    """``(F(α), F'(α))``; the derivative follows from the top eigenvector x
    as ``Im(e^{-iα} <Tx, x>)`` (valid where the top eigenvalue is simple)."""
    t = np.asarray(t, dtype=complex)
    w, v = np.linalg.eigh(real_part(np.exp(-1j * alpha) * t))
    x = v[:, -1]
    z = np.vdot(x, t @ x)
    return float(w[-1]), float((np.exp(-1j * alpha) * z).imag)


@dataclass(frozen=True)
class RangeBoundary:
    """Support points of the closure of W(T), ordered counterclockwise.

    ``alphas[k]`` is the angle whose support line touches ``points[k]``;
    flat edges contribute both endpoints under the same angle.
    """

    alphas: np.ndarray
    points: np.ndarray
    closure_flag: bool = field(default=True)

    def __post_init__(self):
        a = np.array(self.alphas, dtype=float)
        p = np.array(self.points, dtype=complex)
        a.flags.writeable = False
        p.flags.writeable = False
        object.__setattr__(self, "alphas", a)
        object.__setattr__(self, "points", p)

    def __len__(self):
        return self.points.size


def _face_endpoints(t: np.ndarray, alpha: float, q: np.ndarray) -> list[complex]:
    """Endpoints of the face {<Tx,x> : x in span(q), |x| = 1} (a segment on the
    support line), in counterclockwise order."""
    a = q.conj().T @ (np.exp(-1j * alpha) * t) @ q
    k = (a - a.conj().T) / 2j
    _, y = np.linalg.eigh(k)
    ends = []
    for j in (0, -1):
        x = q @ y[:, j]
        ends.append(complex(np.vdot(x, t @ x)))
    if abs(ends[0] - ends[1]) <= 1e-12:
        return ends[:1]
    return ends


def trace_boundary(t: np.ndarray, grid: int = TRACE_GRID, tie_tol: float = 1e-10) -> RangeBoundary:
    """Support-point polyline of the closure of W(T) on a uniform α-grid."""
    if grid < 16:
        raise ValueError("grid must be at least 16")
    t = np.asarray(t, dtype=complex)
    alphas = uniform_angles(grid)
    w, v = map_chunks(lambda a: np.linalg.eigh(rotated_real_parts(t, a)), alphas)
    scale = max(1.0, float(np.max(np.abs(w), initial=0.0)))
    x = v[:, :, -1]
    simple = np.einsum("ni,ij,nj->n", x.conj(), t, x)
    ties = np.count_nonzero(w >= w[:, -1:] - tie_tol * scale, axis=1) > 1
    out_a, out_z = [], []
    for k, alpha in enumerate(alphas):
        if ties[k]:
            top = np.flatnonzero(w[k] >= w[k, -1] - tie_tol * scale)
            pts = _face_endpoints(t, alpha, v[k][:, top])
        else:
            pts = [complex(simple[k])]
        out_a.extend([alpha] * len(pts))
        out_z.extend(pts)
    return RangeBoundary(np.array(out_a), np.array(out_z))


def predicted_closure(spectrum: SpectrumSet) -> EllipseHull:
    """Hull of the ellipses E(λ), λ in the spectrum.

    σ = {1} happens only for P1 = P2 = I, where W = {1}; the hull is then
    flagged so its support function is that of the point 1.
    """
    if len(spectrum) == 0:
        raise EmptySpectrum("cannot build a hull from an empty spectrum")
    return EllipseHull(tuple(spectrum.values), identity=(spectrum.values == (1.0,)))


def mc_oracle(t: np.ndarray, samples: int, seed: int, chunk: int = 8192) -> np.ndarray:
    """``<Tx, x>`` for ``samples`` seeded random unit vectors.

    Vectors are standard complex Gaussians (real parts then imaginary parts,
    drawn chunk by chunk from PCG64) normalized to unit length. Output is
    bit-for-bit reproducible for a given ``seed`` and ``chunk``.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    t = np.asarray(t, dtype=complex)
    d = t.shape[0]
    rng = make_rng(seed)
    out = np.empty(samples, dtype=complex)
    for start in range(0, samples, chunk):
        n = min(chunk, samples - start)
        x = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
        x /= np.linalg.norm(x, axis=1, keepdims=True)
        out[start:start + n] = np.einsum("ni,ij,nj->n", x.conj(), t, x)
    return out


@dataclass(frozen=True)
class HalmosBlockForm:
    """P2 P1 as I (on M1∩M2) ⊕ 2x2 blocks ⊕ 0, in the orthonormal basis ``basis``.

    ``basis`` columns are ordered: M1∩M2, then (h_n, f̃_n) for each block,
    then the three parts on which the product vanishes.
    """

    blocks: tuple
    zero_dim: int
    one_dim: int
    residual: float
    basis: np.ndarray = field(repr=False)

    @property
    def lambdas(self) -> tuple:
        return tuple(lam for lam, _ in self.blocks)

    def assembled(self) -> np.ndarray:
        """The block-diagonal matrix in the computed basis."""
        n = self.one_dim + 2 * len(self.blocks) + self.zero_dim
        out = np.zeros((n, n), dtype=complex)
        out[:self.one_dim, :self.one_dim] = np.eye(self.one_dim)
        for i, (lam, _) in enumerate(self.blocks):
            j = self.one_dim + 2 * i
            out[j, j] = lam
            out[j + 1, j] = np.sqrt(lam * (1.0 - lam))
        return out


def halmos_blocks(pair: ProjectionPair, tol: float = 1e-8) -> HalmosBlockForm:
    """Split P2 P1 into its trivial parts and 2x2 blocks on span{h_n, f̃_n}.

    h_n runs over eigenvectors of P1 P2 P1 in the generic part with
    eigenvalue λ_n in (0, 1), and f̃_n normalizes f_n = (I - P1) P2 h_n,
    whose norm must equal sqrt(λ_n(1 - λ_n)).
    """
    dec = five_part_decomposition(pair, RANK_TOL)
    t = pair.product
    g = dec.generic_part.vectors
    cols = [dec.m1_cap_m2.vectors]
    blocks = []
    if g.shape[1] % 2:
        raise BlockResidualExceeded("generic part has odd dimension")
    if g.shape[1]:
        eig = hermitian_eig(g.conj().T @ pair.gram @ g, tol=np.inf)
        half = g.shape[1] // 2
        for lam, y in zip(eig.eigenvalues[half:], eig.eigenvectors.vectors[:, half:].T):
            lam = float(np.clip(lam, 0.0, 1.0))
            h = g @ y
            f = pair.p2 @ h - pair.p1 @ (pair.p2 @ h)
            nf = np.linalg.norm(f)
            if abs(nf - np.sqrt(lam * (1.0 - lam))) > tol:
                raise BlockResidualExceeded(f"|f_n| = {nf:.3g} but sqrt(λ(1-λ)) = "
                                            f"{np.sqrt(lam * (1 - lam)):.3g}")
            cols.append(np.column_stack([h, f / nf]))
            blocks.append(lam)
    zero_parts = (dec.m1_cap_m2perp, dec.m1perp_cap_m2, dec.m1perp_cap_m2perp)
    cols.extend(p.vectors for p in zero_parts)
    u = np.hstack(cols)
    n1 = dec.m1_cap_m2.dim
    compressed = u.conj().T @ t @ u
    form = HalmosBlockForm(
        blocks=tuple((lam, compressed[n1 + 2 * i:n1 + 2 * i + 2, n1 + 2 * i:n1 + 2 * i + 2].copy())
                     for i, lam in enumerate(blocks)),
        zero_dim=sum(p.dim for p in zero_parts),
        one_dim=n1,
        residual=0.0,
        basis=u,
    )
    target = form.assembled()
    if u.shape[1] != pair.dim:
        raise BlockResidualExceeded(f"assembled basis has {u.shape[1]} columns for dimension {pair.dim}")
    residual = max(float(np.max(np.abs(compressed - target))),
                   float(np.max(np.abs(u @ target @ u.conj().T - t))),
                   float(np.max(np.abs(u.conj().T @ u - np.eye(pair.dim)))))
    if residual > tol:
        raise BlockResidualExceeded(f"block residual {residual:.3g} exceeds {tol:.3g}")
    return HalmosBlockForm(form.blocks, form.zero_dim, form.one_dim, residual, u)


def sector_angle_from_cosine(c: float) -> float:
    c2 = min(max(c, 0.0), 1.0) ** 2
    return float(np.arctan(np.sqrt(c2 / (4.0 - c2))))


def sector_angle(pair: ProjectionPair) -> float:
    """Half-opening of the smallest sector at 1 containing W(P2 P1)."""
    return sector_angle_from_cosine(friedrichs_cosine(pair))


def measured_sector_angle(boundary: RangeBoundary, exclude: float = 1e-9) -> float:
    """``max |arg(1 - z)|`` over traced points, ignoring z within ``exclude`` of 1."""
    w = 1.0 - boundary.points
    w = w[np.abs(w) > exclude]
    if w.size == 0:
        return 0.0
    return float(np.max(np.abs(np.angle(w))))


def sector_check(boundary: RangeBoundary, angle: float, tol: float = 1e-8) -> bool:
    return measured_sector_angle(boundary) <= angle + tol


def rectangle_check(boundary: RangeBoundary, tol: float = 1e-9) -> bool:
    """All points inside [-1/8, 1] x [-1/4, 1/4] (with slack ``tol``)."""
    z = np.asarray(boundary.points)
    return bool(np.all(z.real >= -0.125 - tol) and np.all(z.real <= 1.0 + tol)
                and np.all(np.abs(z.imag) <= 0.25 + tol))


def numerical_radius(t: np.ndarray, grid: int = TRACE_GRID) -> float:
    """``w(T) = max_α F(α)``: grid sweep followed by bounded Brent refinement."""
    alphas = uniform_angles(grid)
    f = support_values(t, alphas)
    k = int(np.argmax(f))
    step = alphas[1] - alphas[0]
    t = np.asarray(t, dtype=complex)
    res = minimize_scalar(lambda a: -np.linalg.eigvalsh(real_part(np.exp(-1j * a) * t))[-1],
                          bounds=(alphas[k] - step, alphas[k] + step),
                          method="bounded", options={"xatol": 1e-12})
    return float(max(f[k], -res.fun))
