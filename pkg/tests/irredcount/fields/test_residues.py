from dataclasses import replace
from math import isclose, log, pi, sqrt

import pytest

from irredcount.core.errors import UnsupportedFieldError
from irredcount.fields.residues import (
    GOLDEN_RATIO,
    ResidueData,
    class_field_data,
    has_class_field_data,
    imaginary_quadratic_residue,
    residue,
)


def _l_at_one(h, w, discriminant):
    """L(1, chi_D) of an imaginary quadratic discriminant D."""
    return 2 * pi * h / (w * sqrt(-discriminant))


L_CHI_5 = 2 * log(GOLDEN_RATIO) / sqrt(5)


def test_quadratic_residues():
    assert isclose(residue(class_field_data(-5)), pi / sqrt(5), rel_tol=1e-12)
    assert isclose(residue(class_field_data(-15)), 2 * pi / sqrt(15), rel_tol=1e-12)


def test_gaussian_residue(field_m1):
    assert isclose(imaginary_quadratic_residue(field_m1), pi / 4, rel_tol=1e-12)


def test_hilbert_class_field_residues():
    assert isclose(
        residue(class_field_data(-5, hilbert=True)), pi**2 / 10 * log(GOLDEN_RATIO), rel_tol=1e-12
    )
    assert isclose(
        residue(class_field_data(-15, hilbert=True)),
        4 * pi**2 / 45 * log(GOLDEN_RATIO),
        rel_tol=1e-12,
    )


def test_class_field_residue_factors_over_quadratic_subfields():
    # Q(i, sqrt 5) contains Q(sqrt -5), Q(i), Q(sqrt 5)
    a_l1 = _l_at_one(2, 2, -20) * _l_at_one(1, 4, -4) * L_CHI_5
    assert isclose(residue(class_field_data(-5, hilbert=True)), a_l1, rel_tol=1e-12)

    # Q(sqrt -3, sqrt 5) contains Q(sqrt -15), Q(sqrt -3), Q(sqrt 5)
    a_l2 = _l_at_one(2, 2, -15) * _l_at_one(1, 6, -3) * L_CHI_5
    assert isclose(residue(class_field_data(-15, hilbert=True)), a_l2, rel_tol=1e-12)


def test_class_field_data_availability():
    assert has_class_field_data(-5)
    assert has_class_field_data(-15)
    assert not has_class_field_data(-6)
    with pytest.raises(UnsupportedFieldError):
        class_field_data(-6, hilbert=True)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"r1": -1},
        {"regulator": 0.0},
        {"h": 0},
        {"w": 0},
        {"discriminant": 0},
    ],
)
def test_residue_data_validation(kwargs):
    base = {"r1": 0, "r2": 1, "regulator": 1.0, "h": 1, "w": 2, "discriminant": -20}
    with pytest.raises(ValueError):
        ResidueData(**{**base, **kwargs})


def test_residue_of_the_rationals_is_one():
    assert residue(ResidueData(r1=1, r2=0, regulator=1.0, h=1, w=2, discriminant=1)) == 1


@pytest.mark.parametrize("d, hilbert", [(-5, False), (-15, False), (-5, True), (-15, True)])
def test_doubling_roots_of_unity_halves_the_residue(d, hilbert):
    data = class_field_data(d, hilbert=hilbert)
    doubled = replace(data, w=2 * data.w)
    assert isclose(residue(doubled), residue(data) / 2, rel_tol=1e-12)


def test_class_field_data_counts_roots_of_unity_of_the_class_field():
    l1 = class_field_data(-5, hilbert=True)
    l2 = class_field_data(-15, hilbert=True)

    assert (l1.r1, l1.r2, l1.h, l1.w, l1.discriminant) == (0, 2, 1, 4, 400)
    assert (l2.r1, l2.r2, l2.h, l2.w, l2.discriminant) == (0, 2, 1, 6, 225)
    assert l1.regulator == l2.regulator == pytest.approx(2 * log(GOLDEN_RATIO))
