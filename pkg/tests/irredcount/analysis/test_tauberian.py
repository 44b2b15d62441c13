import random
from math import gamma, pi

import pytest

from irredcount.analysis.tauberian import (
    EULER_GAMMA,
    MAX_I_ORDER,
    TauberianConstants,
    e_coefficients,
    im_constants,
)


def test_first_i_constants():
    I = im_constants(3)
    assert I[0] == 0
    assert I[1] == pytest.approx(1, abs=1e-14)
    assert I[2] == pytest.approx(EULER_GAMMA, abs=1e-10)
    assert I[3] == pytest.approx(EULER_GAMMA**2 / 2 - pi**2 / 12, abs=1e-12)


def test_euler_gamma_is_the_working_precision_constant():
    assert EULER_GAMMA == 0.5772156649015329
    assert im_constants(2)[2] == EULER_GAMMA


@pytest.mark.parametrize("t", [0.1, 0.3, 0.5])
def test_i_constants_generate_reciprocal_gamma(t):
    I = im_constants(MAX_I_ORDER)
    series = sum(I[m] * t ** (m - 1) for m in range(1, MAX_I_ORDER + 1))
    assert series == pytest.approx(1 / gamma(1 + t), abs=1e-8)


def test_im_constants_of_order_zero():
    assert im_constants(0) == [0.0]


def test_im_constants_outside_the_table():
    with pytest.raises(ValueError):
        im_constants(MAX_I_ORDER + 1)


@pytest.mark.parametrize("k", range(1, 7))
def test_top_e_coefficients_match_closed_forms(k):
    rng = random.Random(k)
    g = [rng.uniform(-1, 1) for _ in range(k + 1)]
    e = e_coefficients(g, k)

    assert len(e) == k
    assert e[k - 1] == pytest.approx(k * g[k], abs=1e-12)
    if k >= 2:
        expected = (k - 1) * g[k - 1] + k * (k - 1) * g[k] * EULER_GAMMA
        assert e[k - 2] == pytest.approx(expected, abs=1e-12)


def test_e_coefficients_check_lengths():
    with pytest.raises(ValueError):
        e_coefficients([1.0, 2.0], 2)
    with pytest.raises(ValueError):
        e_coefficients([1.0], 0)


def test_tauberian_constants_compute():
    constants = TauberianConstants.compute([0.0, 0.5, 0.125], 2)
    assert constants.e == pytest.approx([0.5 + 0.25 * EULER_GAMMA, 0.25])
    assert set(constants.to_dict()) == {"I", "e"}
