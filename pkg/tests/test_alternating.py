import numpy as np
import pytest

from projrange.alternating import (alternating_iterate, dichotomy_report, power_norms, reduce_pair,
                                   top_start_vector)
from projrange.errors import PreconditionError, ZeroInitialVector
from projrange.linalg import OrthonormalBasis, ProjectionPair, projector, subspace_intersection
from projrange.pairs import random_pair, random_pair_family, two_lines
from projrange.spectral import construct_pair


def test_equal_subspaces_converge_in_one_step():
    m = OrthonormalBasis.standard(3, [0, 1])
    run = alternating_iterate(ProjectionPair(m, m), np.array([1.0, 2.0, 3.0]), 4)
    assert run.errors[1:] == pytest.approx(0.0, abs=1e-15)
    assert run.intersection_dim == 2


def test_two_lines_error_is_exact_power():
    th = np.pi / 5
    run = alternating_iterate(two_lines(th), np.array([1.0, 0.0]), 20)
    n = np.arange(1, 21)
    assert run.errors[1:] == pytest.approx(np.cos(th) ** (2 * n - 1), rel=1e-12)
    assert run.predicted_rate == pytest.approx(np.cos(th) ** 2)


def test_slow_constructed_pair_matches_closed_form():
    pair = construct_pair([0.0, 0.99])
    run = alternating_iterate(pair, top_start_vector(pair), 50)
    assert run.errors[50] == pytest.approx(0.99 ** 49.5, rel=1e-10)
    assert run.errors[50] <= run.bound(50) + 1e-9


def test_errors_non_increasing_and_bounded():
    rng = np.random.default_rng(0)
    for pair in random_pair_family(5, 20, max_dim=10):
        x0 = rng.standard_normal(pair.dim) + 1j * rng.standard_normal(pair.dim)
        run = alternating_iterate(pair, x0, 30)
        assert np.all(np.diff(run.errors) <= 1e-12)
        for n, err in run.iterates[1:]:
            assert err <= run.bound(n) + 1e-9


def test_log_error_is_affine_with_slope_two_log_c():
    for k in ([0.0, 0.3, 0.7], [0.0, 0.5, 0.9, 0.95]):
        pair = construct_pair(k)
        run = alternating_iterate(pair, top_start_vector(pair), 50)
        n = np.arange(5, 51)
        slope = np.polyfit(n, np.log(run.errors[5:51]), 1)[0]
        assert slope == pytest.approx(np.log(max(k)), abs=1e-6)


def test_zero_initial_vector():
    with pytest.raises(ZeroInitialVector):
        alternating_iterate(two_lines(0.3), np.zeros(2), 3)


def test_power_norms_two_lines():
    th = np.pi / 6
    n = np.arange(1, 31)
    assert np.max(np.abs(power_norms(two_lines(th), 30) - np.cos(th) ** (2 * n - 1))) < 1e-8


def test_dichotomy_two_lines_fast():
    rep = dichotomy_report(two_lines(np.pi / 3))
    assert rep.consistent and not rep.slow
    assert all(not rep.items[k][0] for k in (1, 2, 3, 4, 5, 6, 7))
    assert rep.items[8] == (True, pytest.approx(np.arctan(np.sqrt(0.25 / 3.75)), abs=1e-15))


def test_dichotomy_rejects_common_direction():
    with pytest.raises(PreconditionError):
        dichotomy_report(construct_pair([0.0, 0.5, 1.0]))


def test_dichotomy_numerical_boundary_case():
    rep = dichotomy_report(construct_pair([0.0, 1.0 - 1e-12]), tol=1e-9)
    assert rep.consistent and rep.slow
    assert all(rep.items[k][0] for k in (1, 2, 4, 5, 6, 7))
    assert rep.items[3][0] is False and rep.items[8][0] is False


def test_dichotomy_consistent_on_reduced_random_pairs():
    for pair in random_pair_family(2, 40, max_dim=12):
        assert dichotomy_report(reduce_pair(pair)).consistent


def test_reduce_pair_removes_intersection():
    pair = random_pair(4, 8, 4, 4, shared=2)
    red = reduce_pair(pair)
    assert red.basis1.dim == 2 and red.basis2.dim == 2
    inter = projector(subspace_intersection(pair.basis1, pair.basis2))
    assert np.max(np.abs(pair.product - inter - red.product)) < 1e-12
