import numpy as np
import pytest

from projrange.errors import IndexOutOfRange
from projrange.fourier import (annihilation_check, dft_matrix, fourier_pair, subsets_up_to,
                               translation_classes)


def test_dft_examples():
    assert np.allclose(dft_matrix(1), [[1]])
    assert np.allclose(dft_matrix(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2))
    f = dft_matrix(4)
    assert np.max(np.abs(f.conj().T @ f - np.eye(4))) < 1e-14
    with pytest.raises(ValueError):
        dft_matrix(0)


def test_dft_unitary_up_to_64():
    for n in (3, 16, 64):
        f = dft_matrix(n)
        assert np.max(np.abs(f.conj().T @ f - np.eye(n))) < 1e-12


def test_fourier_pair_projections():
    pair = fourier_pair([1], [0], 4)
    assert np.allclose(pair.p2, np.diag([0, 1, 0, 0]))
    assert np.allclose(pair.p1, np.full((4, 4), 0.25))


def test_single_points_n4():
    rep = annihilation_check([0], [0], 4)
    assert rep.norm_psp == pytest.approx(0.5, abs=1e-12)
    assert rep.spectral_radius == pytest.approx(0.25, abs=1e-12)
    assert rep.numerical_radius == pytest.approx(0.375, abs=1e-12)
    assert rep.strong and rep.weak and rep.consistent


def test_empty_s_is_strong():
    rep = annihilation_check([], [0, 1, 2], 8)
    assert rep.norm_psp == 0.0 and rep.strong and rep.consistent


def test_full_sets_are_not_annihilating():
    rep = annihilation_check(range(4), range(4), 4)
    assert not rep.weak and not rep.strong and rep.consistent
    assert rep.sector_theta is None


def test_comb_is_not_annihilating():
    # 1 + δ_2 on Z/4 is its own (scaled) transform: supported on {0, 2} both ways
    rep = annihilation_check([0, 2], [0, 2], 4)
    assert not rep.strong and rep.consistent
    assert rep.norm_psp == pytest.approx(1.0, abs=1e-12)


def test_out_of_range_indices():
    with pytest.raises(IndexOutOfRange):
        annihilation_check([4], [0], 4)
    with pytest.raises(IndexOutOfRange):
        annihilation_check([0], [-1], 4)


def test_strong_pair_criteria_agree_n8_sample():
    subsets = list(subsets_up_to(8, 2))
    for s in subsets[::3]:
        for sigma in subsets[::2]:
            rep = annihilation_check(s, sigma, 8)
            assert rep.consistent, (s, sigma, rep.criteria)


def test_translation_invariance():
    base = annihilation_check([0, 3], [1, 2, 6], 8)
    moved = annihilation_check([5, 0], [4, 5, 1], 8)  # S + 5, Σ + 3
    assert moved.norm_psp == pytest.approx(base.norm_psp, abs=1e-12)
    assert moved.numerical_radius == pytest.approx(base.numerical_radius, abs=1e-12)


def test_translation_classes_cover_all_subsets():
    classes = translation_classes(8, 3)
    assert len(classes) < len(list(subsets_up_to(8, 3)))
    rebuilt = {tuple(sorted((i + a) % 8 for i in c)) for c in classes for a in range(8)}
    assert rebuilt == set(subsets_up_to(8, 3))
