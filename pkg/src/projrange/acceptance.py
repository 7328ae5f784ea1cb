"""The acceptance suite: eleven end-to-end checks with fixed seeds and tolerances.

Each ``criterion_*`` function returns a :class:`CriterionResult`; ``run_all``
runs them in order. Used by ``tests/test_acceptance.py`` and ``projrange verify``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .alternating import dichotomy_report, power_norms, reduce_pair
from .ellipse import (ellipse_support, hull_contains_many, hull_support, lambda_alpha,
                      support_point, uniform_angles)
from .fourier import annihilation_check, subsets_up_to, translation_classes
from .linalg import OrthonormalBasis, ProjectionPair
from .numrange import (measured_sector_angle, mc_oracle, predicted_closure, rectangle_check,
                       sector_angle, sector_angle_from_cosine, support_values, trace_boundary)
from .pairs import make_rng, random_pair, random_pair_family, two_lines
from .recovery import full_recovery, radii_report, recover_upper_spectrum, recovery_profile
from .spectral import construct_pair, product_spectrum

FAMILY_SEED = 20240611
TWO_LINE_ANGLES = (np.pi / 6, np.pi / 4, np.pi / 3)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail}"


@lru_cache(maxsize=1)
def random_family() -> tuple:
    """The 100 seeded random pairs (2 <= d <= 20) shared by criteria 1, 4, 6 and 8."""
    return tuple(random_pair_family(FAMILY_SEED, 100, max_dim=20))


def random_spectrum(rng: np.random.Generator, size: int, separation: float = 0.0,
                    avoid=()) -> list[float]:
    """``{0}`` plus ``size - 1`` values in (0, 1], pairwise and from ``avoid`` at
    least ``separation`` apart."""
    values = [0.0]
    while len(values) < size:
        x = 1.0 if rng.random() < 0.1 else float(rng.uniform(0.0, 1.0))
        if all(abs(x - v) > separation for v in values + list(avoid)) and x > 0.0:
            values.append(x)
    return sorted(values)


@lru_cache(maxsize=1)
def constructed_family() -> tuple:
    """50 spectra K ∋ 0 (|K| <= 8, gaps >= 1e-2, away from 1/4) and their pairs."""
    rng = make_rng(FAMILY_SEED + 1)
    out = []
    for _ in range(50):
        k = random_spectrum(rng, int(rng.integers(1, 9)), separation=1e-2, avoid=(0.25,))
        out.append((tuple(k), construct_pair(k)))
    return tuple(out)


def localization_pairs() -> list[ProjectionPair]:
    extra = [two_lines(th) for th in TWO_LINE_ANGLES]
    extra += [construct_pair(k) for k in ([0.0, 1.0], [0.0, 0.5, 1.0], [0.0, 0.25, 0.999, 1.0])]
    return list(random_family()) + [p for _, p in constructed_family()] + extra


def criterion_1() -> CriterionResult:
    start = time.perf_counter()
    alphas = uniform_angles(1024)
    worst = 0.0
    for pair in random_family():
        hull = predicted_closure(product_spectrum(pair))
        worst = max(worst, float(np.max(np.abs(support_values(pair.product, alphas)
                                                - hull_support(hull, alphas)))))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed < 60.0
    return CriterionResult(1, "two-method boundary agreement", ok,
                           f"max support gap {worst:.3e} (tol 1e-8) over 100 pairs in {elapsed:.1f}s")


def criterion_2() -> CriterionResult:
    worst = 0.0
    for theta in TWO_LINE_ANGLES:
        boundary = trace_boundary(two_lines(theta).product, 1024)
        expected = support_point(np.cos(theta) ** 2, boundary.alphas)
        worst = max(worst, float(np.max(np.abs(boundary.points - expected))))
    return CriterionResult(2, "two-lines exactness", worst <= 1e-8,
                           f"max distance to E(cos^2 theta) support points {worst:.3e} (tol 1e-8)")


def criterion_3() -> CriterionResult:
    rng = make_rng(FAMILY_SEED + 2)
    worst, failures = 0.0, 0
    for _ in range(50):
        k = random_spectrum(rng, int(rng.integers(1, 11)), separation=1e-6)
        spec = product_spectrum(construct_pair(k))
        if len(spec) != len(k):
            failures += 1
            continue
        worst = max(worst, float(np.max(np.abs(np.array(spec.values) - np.array(k)))))
    ok = failures == 0 and worst <= 1e-10
    return CriterionResult(3, "construction round-trip", ok,
                           f"max value error {worst:.3e} (tol 1e-10), {failures} size mismatches over 50 K")


def criterion_4() -> CriterionResult:
    worst, kitt_viol, margin_viol, strict_cases = 0.0, 0, 0, 0
    for pair in random_family():
        rep = radii_report(pair)
        worst = max(worst, abs(rep.numerical_radius - rep.predicted_numerical_radius))
        if rep.numerical_radius > rep.kittaneh_bound + 1e-12:
            kitt_viol += 1
        c = rep.friedrichs_cosine
        if rep.trivial_intersection and 0.0 < c < 1.0:
            strict_cases += 1
            if rep.kittaneh_bound - rep.numerical_radius < 0.5 * (c ** 1.5 - c * c) - 1e-9:
                margin_viol += 1
    ok = worst <= 1e-9 and kitt_viol == 0 and margin_viol == 0
    return CriterionResult(4, "radii identity and Kittaneh bound", ok,
                           f"max |w - (r+sqrt r)/2| {worst:.3e} (tol 1e-9); bound violations {kitt_viol}; "
                           f"strict-margin violations {margin_viol} of {strict_cases}")


def criterion_5() -> CriterionResult:
    full_bad, upper_bad = 0, 0
    for k, pair in constructed_family():
        truth = product_spectrum(pair)
        if not full_recovery(pair).matches(truth.values, 1e-6):
            full_bad += 1
        upper = recover_upper_spectrum(recovery_profile(pair.product))
        if not upper.matches([v for v in truth.values if v >= 0.25], 1e-6):
            upper_bad += 1
    low = construct_pair([0.0, 0.05, 0.1, 0.2])
    empty = len(recover_upper_spectrum(recovery_profile(low.product))) == 0
    ok = full_bad == 0 and upper_bad == 0 and empty
    return CriterionResult(5, "spectrum recovery", ok,
                           f"full-recovery mismatches {full_bad}/50; upper mismatches {upper_bad}/50; "
                           f"sub-1/4 spectrum gives empty upper set: {empty}")


def criterion_6() -> CriterionResult:
    rect_bad, sector_bad, worst = 0, 0, -np.inf
    pairs = localization_pairs()
    for pair in pairs:
        boundary = trace_boundary(pair.product, 1024)
        if not rectangle_check(boundary):
            rect_bad += 1
        excess = measured_sector_angle(boundary) - sector_angle(pair)
        worst = max(worst, excess)
        if excess > 1e-8:
            sector_bad += 1
    pi6 = abs(sector_angle_from_cosine(1.0) - np.pi / 6)
    ok = rect_bad == 0 and sector_bad == 0 and pi6 <= 1e-12
    return CriterionResult(6, "rectangle and sector localization", ok,
                           f"{len(pairs)} pairs: rectangle failures {rect_bad}, sector failures {sector_bad} "
                           f"(max excess {worst:.2e}); |angle(c=1) - pi/6| = {pi6:.1e}")


def mc_pairs() -> list[tuple[str, ProjectionPair]]:
    named = [("two lines pi/4", two_lines(np.pi / 4))]
    for k in ([0.0, 0.5], [0.0, 0.3, 0.9], [0.0, 0.2, 0.6, 0.95]):
        named.append((f"K={k}", construct_pair(k)))
    for seed, (d, d1, d2) in enumerate([(3, 1, 2), (4, 2, 2), (5, 2, 3), (6, 3, 3)]):
        named.append((f"random d={d}", random_pair(FAMILY_SEED + 10 + seed, d, d1, d2)))
    return named


def mc_gap(t: np.ndarray, hull, samples: np.ndarray, grid: int = 2048) -> float:
    """Hausdorff distance between the hull of the samples and the predicted
    hull (which contains them): the largest support-function gap."""
    alphas = uniform_angles(grid)
    rot = np.exp(-1j * alphas)
    emp = np.full(grid, -np.inf)
    for start in range(0, samples.size, 8192):
        block = samples[start:start + 8192]
        emp = np.maximum(emp, np.max((block[:, None] * rot[None, :]).real, axis=0))
    return float(np.max(hull_support(hull, alphas) - emp))


def criterion_7(samples: int = 100_000) -> CriterionResult:
    outside, gaps = 0, []
    for i, (name, pair) in enumerate(mc_pairs()):
        hull = predicted_closure(product_spectrum(pair))
        z = mc_oracle(pair.product, samples, seed=FAMILY_SEED + i)
        outside += int(np.count_nonzero(~hull_contains_many(hull, z, tol=1e-8)))
        gaps.append((name, pair.dim, mc_gap(pair.product, hull, z)))
    worst = max(g for _, _, g in gaps)
    ok = outside == 0 and worst <= 1e-2
    per = "; ".join(f"{n} (d={d}) {g:.2e}" for n, d, g in gaps)
    return CriterionResult(7, "Monte-Carlo containment", ok,
                           f"points outside hull {outside}; Hausdorff gaps (tol 1e-2): {per}")


def criterion_8() -> CriterionResult:
    worst = 0.0
    for theta in TWO_LINE_ANGLES:
        n = np.arange(1, 31)
        measured = power_norms(two_lines(theta), 30)
        worst = max(worst, float(np.max(np.abs(measured - np.cos(theta) ** (2 * n - 1)))))
    pairs = [reduce_pair(p) for p in localization_pairs()]
    pairs.append(construct_pair([0.0, 1.0 - 1e-12]))
    bad = sum(not dichotomy_report(p).consistent for p in pairs)
    ok = worst <= 1e-8 and bad == 0
    return CriterionResult(8, "alternating projections and dichotomy", ok,
                           f"max |norm - cos^(2n-1)| {worst:.3e} (tol 1e-8); "
                           f"inconsistent reports {bad}/{len(pairs)}")


def annihilation_cases():
    """(N, S, Σ) for N in {4, 8, 16}, |S|, |Σ| <= 3: every pair for N = 4 and 8,
    one pair per (shift class of S, shift class of Σ) for N = 16."""
    for n in (4, 8):
        subsets = list(subsets_up_to(n, 3))
        for s in subsets:
            for sigma in subsets:
                yield n, s, sigma
    classes = translation_classes(16, 3)
    for s in classes:
        for sigma in classes:
            yield 16, s, sigma


def criterion_9() -> CriterionResult:
    total, bad = 0, 0
    for n, s, sigma in annihilation_cases():
        total += 1
        if not annihilation_check(s, sigma, n).consistent:
            bad += 1
    ref = annihilation_check([0], [0], 4)
    err = abs(ref.norm_psp - 0.5)
    ok = bad == 0 and err <= 1e-12
    return CriterionResult(9, "annihilating pairs", ok,
                           f"{bad} inconsistent of {total} cases; |norm(N=4,{{0}},{{0}}) - 0.5| = {err:.1e}")


def c3_example() -> ProjectionPair:
    return ProjectionPair(OrthonormalBasis.standard(3, [0]), OrthonormalBasis.standard(3, [1]))


def criterion_10() -> CriterionResult:
    pair = c3_example()
    s = product_spectrum(pair)
    sc = product_spectrum(pair.with_first_complemented())
    ok = s.values == (0.0,) and sc.values == (0.0, 1.0) and full_recovery(pair).values == (0.0,)
    return CriterionResult(10, "C^3 example", ok,
                           f"sigma(P2P1) = {list(s.values)}, sigma(P2(I-P1)) = {list(sc.values)}")


def criterion_11() -> CriterionResult:
    h = 1e-6
    crit = np.pi / 3 + (np.arange(64) + 0.5) * (2 * np.pi / 3) / 64
    worst = 0.0
    for a in crit:
        lam = lambda_alpha(a)
        d = (ellipse_support(lam + h, a) - ellipse_support(lam - h, a)) / (2 * h)
        worst = max(worst, abs(float(d)))
    flat = (np.arange(64) + 0.5) * (np.pi / 3) / 64
    grid = np.linspace(1e-3, 1.0 - 1e-3, 999)
    monotone = all(np.all(np.diff(ellipse_support(grid, a)) > 0) for a in flat)
    ok = worst <= 1e-6 and monotone
    return CriterionResult(11, "critical-point laws", ok,
                           f"max |g'(lambda_alpha)| {worst:.2e} (tol 1e-6); monotone on (0, pi/3): {monotone}")


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11)


def run_all(selected=None) -> list[CriterionResult]:
    chosen = CRITERIA if not selected else [CRITERIA[i - 1] for i in selected]
    return [fn() for fn in chosen]
