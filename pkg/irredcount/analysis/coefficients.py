"""Coefficients of the irreducible Dirichlet series and the asymptotic constants of M(x).

Write L = (1/h) log(1/(s - 1)). With z_{i1} = L + g_i for each class i, the series of
irreducible principal ideals is a polynomial sum_mu c_mu L^mu of degree D = D(G), whose
coefficients come from the cycle-index polynomials of the minimal zero-sum patterns.
In powers of log(1/(s - 1)) the coefficients are g_nu = h^(-nu) c_nu.
"""

from dataclasses import dataclass
from math import e, exp, factorial, fsum, log, prod
from typing import List, Optional, Sequence, Tuple

from irredcount.analysis.arithmetic import totient
from irredcount.analysis.prime_sums import (
    DEFAULT_TOLERANCE,
    class_g_values,
    class_z2_values,
)
from irredcount.analysis.tauberian import EULER_GAMMA, e_coefficients
from irredcount.core.errors import UnsupportedFieldError
from irredcount.core.report import CoefficientSet
from irredcount.fields.quadratic import ImaginaryQuadraticField
from irredcount.fields.residues import has_class_field_data
from irredcount.groups.abelian import FiniteAbelianGroup, cyclic_group
from irredcount.groups.zero_sums import davenport_constant, patterns_by_size
from irredcount.polynomials.cycle_index import rho


@dataclass(frozen=True)
class TopCoefficients:
    davenport: int
    c_d: float
    c_dm1: float
    c_dm2: Optional[float]


def _check_inputs(group: FiniteAbelianGroup, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != group.order:
            raise ValueError(
                f"Expected one value per class of {group.label()} ({group.order}), got {len(v)}"
            )


def _inverse_factorials(k: Sequence[int]) -> float:
    return 1 / prod(factorial(ki) for ki in k)


def _first_order(k: Sequence[int], g: Sequence[float]) -> float:
    return fsum(ki * gi for ki, gi in zip(k, g))


def _second_order(k: Sequence[int], g: Sequence[float], z2: Sequence[float]) -> float:
    squares = fsum(ki * (ki - 1) / 2 * (gi * gi + zi) for ki, gi, zi in zip(k, g, z2))
    cross = fsum(
        k[a] * k[b] * g[a] * g[b] for a in range(len(k)) for b in range(a + 1, len(k))
    )
    return squares + cross


def coefficients_top(
    group: FiniteAbelianGroup, g: Sequence[float], z2: Sequence[float]
) -> TopCoefficients:
    """c_D, c_{D-1} and (for D >= 2) c_{D-2} from the patterns of size D, D - 1, D - 2."""
    _check_inputs(group, g, z2)

    D = davenport_constant(group)
    by_size = patterns_by_size(group, D)
    mults = {m: [p.multiplicities(group) for p in pats] for m, pats in by_size.items()}
    mults[0] = []

    c_d = fsum(_inverse_factorials(k) for k in mults[D])
    c_dm1 = fsum(_inverse_factorials(k) for k in mults[D - 1]) + fsum(
        _inverse_factorials(k) * _first_order(k, g) for k in mults[D]
    )

    c_dm2 = None
    if D >= 2:
        c_dm2 = (
            fsum(_inverse_factorials(k) for k in mults[D - 2])
            + fsum(_inverse_factorials(k) * _first_order(k, g) for k in mults[D - 1])
            + fsum(_inverse_factorials(k) * _second_order(k, g, z2) for k in mults[D])
        )

    return TopCoefficients(davenport=D, c_d=c_d, c_dm1=c_dm1, c_dm2=c_dm2)


def _class_polynomial(k: int, g: float, z: Sequence[float]) -> List[float]:
    """Coefficients in L of P_k(L + g, z_2, ..., z_k)."""
    coeffs = [0.0] * (k + 1)
    for nu1 in range(k + 1):
        r = float(rho(k, nu1, z))
        if r == 0:
            continue
        # (L + g)^nu1 / nu1!
        for lam in range(nu1 + 1):
            coeffs[lam] += r * g ** (nu1 - lam) / (factorial(lam) * factorial(nu1 - lam))
    return coeffs


def _multiply(p: List[float], q: List[float]) -> List[float]:
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def c_mu_general(
    group: FiniteAbelianGroup,
    mu: int,
    g: Sequence[float],
    z: Sequence[Sequence[float]],
) -> float:
    """Any c_mu, 0 <= mu <= D, by full expansion of the pattern polynomials.

    z[i] holds z_{i2}, z_{i3}, ... for class i and must reach z_{iD}.
    """
    _check_inputs(group, g, z)
    D = davenport_constant(group)
    if not 0 <= mu <= D:
        raise ValueError(f"mu must lie in [0, {D}], got {mu}")

    terms = []
    for m, patterns in patterns_by_size(group, D).items():
        if m < mu:
            continue
        for pattern in patterns:
            poly = [1.0]
            for i, ki in enumerate(pattern.multiplicities(group)):
                if ki:
                    poly = _multiply(poly, _class_polynomial(ki, g[i], z[i]))
            terms.append(poly[mu])
    return fsum(terms)


def _tauberian_g(top: TopCoefficients, h: int) -> List[float]:
    D = top.davenport
    g_nu = [0.0] * (D + 1)
    g_nu[D] = top.c_d * h**-D
    g_nu[D - 1] = top.c_dm1 * h ** (1 - D)
    if top.c_dm2 is not None:
        g_nu[D - 2] = top.c_dm2 * h ** (2 - D)
    return g_nu


def asymptotic_cb(
    group: FiniteAbelianGroup, g: Sequence[float], z2: Sequence[float]
) -> Tuple[float, Optional[float]]:
    """(C, B) with M(x) ~ C (x/log x)(loglog x)^(D-1) + B (x/log x)(loglog x)^(D-2)."""
    top = coefficients_top(group, g, z2)
    D = top.davenport
    expansion = e_coefficients(_tauberian_g(top, group.order), D)
    return expansion[D - 1], (expansion[D - 2] if D >= 2 else None)


def cyclic_cb(h: int, generator_g_sum: float) -> Tuple[float, float]:
    """Closed-form (C, B) for a cyclic class group of order h >= 2.

    `generator_g_sum` is the sum of g_{c^k}(1) over the generators c^k of the group.
    """
    if h < 2:
        raise ValueError(f"Cyclic closed form needs h >= 2, got {h}")

    phi = totient(h)
    # D_{h-1} collapses to a single pattern at h = 3
    a = 0.5 if h == 3 else 1.0
    C = phi / (factorial(h - 1) * h**h)
    B = phi * EULER_GAMMA / (factorial(h - 2) * h**h) + (h - 1) / h ** (h - 1) * (
        phi * a / factorial(h - 2) + generator_g_sum / factorial(h - 1)
    )
    return C, B


def build_coefficient_set(
    group: FiniteAbelianGroup, g: Sequence[float], z2: Sequence[float]
) -> CoefficientSet:
    top = coefficients_top(group, g, z2)
    C, B = asymptotic_cb(group, g, z2)
    return CoefficientSet(
        order=group.order,
        davenport=top.davenport,
        c_d=top.c_d,
        c_dm1=top.c_dm1,
        c_dm2=top.c_dm2,
        C=C,
        B=B,
        g=list(g),
        z2=list(z2),
    )


def field_coefficients(
    field: ImaginaryQuadraticField,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> CoefficientSet:
    """Coefficient set of Q(sqrt d) for h <= 2; h = 2 without class field data gives C only."""
    if field.h > 2:
        raise UnsupportedFieldError(
            f"{field.label} has class number {field.h}; coefficients need h <= 2"
        )

    group = cyclic_group(field.h)
    if field.h == 2 and not has_class_field_data(field.d):
        # c_D does not depend on the class constants
        top = coefficients_top(group, [0.0, 0.0], [0.0, 0.0])
        D = top.davenport
        return CoefficientSet(
            order=2, davenport=D, c_d=top.c_d, c_dm1=None, c_dm2=None,
            C=D * top.c_d * 2.0**-D, B=None,
        )

    g = [v.value for v in class_g_values(field, tolerance, workers=workers)]
    z2 = [v.value for v in class_z2_values(field, tolerance, workers=workers)]
    return build_coefficient_set(group, g, z2)


@dataclass(frozen=True)
class Prediction:
    leading: Optional[float]
    predicted: Optional[float]
    error_scale: Optional[float]


def asymptotic_prediction(coefficients: CoefficientSet, x: float) -> Prediction:
    """Two-term prediction for M(x) and the size of the error term; all None below e^e."""
    if x < exp(e):
        return Prediction(None, None, None)

    D = coefficients.davenport
    lx = log(x)
    llx = log(lx)
    leading = coefficients.C * x / lx * llx ** (D - 1)
    predicted = leading
    if coefficients.B is not None:
        predicted += coefficients.B * x / lx * llx ** (D - 2)

    if D >= 3:
        error_scale = x * llx ** (D - 3) / lx
    else:
        error_scale = x / lx**1.5
    return Prediction(leading=leading, predicted=predicted, error_scale=error_scale)
