"""Reference numbers computed once in 40-digit arithmetic (mpmath eigensolver on
the explicit matrices) and frozen here."""
import numpy as np
import pytest

from projrange.alternating import alternating_iterate, top_start_vector
from projrange.fourier import annihilation_check
from projrange.numrange import sector_angle, support_operator
from projrange.pairs import two_lines
from projrange.recovery import radii_report
from projrange.spectral import construct_pair

TWO_LINES_PI4_F0 = 0.6035533905932737622
SECTOR_TWO_LINES_PI3 = 0.2526802551420786535
DECAY_099_N50 = 0.6080539759344780180
KITTANEH_THETA_08 = 0.6391202729797504976
RADIUS_THETA_08 = 0.5910534740982604908


def test_two_lines_support():
    assert support_operator(two_lines(np.pi / 4).product, 0.0) == pytest.approx(TWO_LINES_PI4_F0, abs=1e-15)


def test_sector_two_lines():
    assert sector_angle(two_lines(np.pi / 3)) == pytest.approx(SECTOR_TWO_LINES_PI3, abs=1e-15)


def test_decay_closed_form():
    pair = construct_pair([0.0, 0.99])
    run = alternating_iterate(pair, top_start_vector(pair), 50)
    assert run.errors[50] == pytest.approx(DECAY_099_N50, rel=1e-12)


def test_radii_two_lines():
    rep = radii_report(two_lines(0.8))
    assert rep.kittaneh_bound == pytest.approx(KITTANEH_THETA_08, abs=1e-14)
    assert rep.numerical_radius == pytest.approx(RADIUS_THETA_08, abs=1e-12)


def test_dft_single_points():
    rep = annihilation_check([0], [0], 4)
    assert rep.norm_psp == pytest.approx(0.5, abs=1e-12)
    assert rep.numerical_radius == pytest.approx(0.375, abs=1e-12)
