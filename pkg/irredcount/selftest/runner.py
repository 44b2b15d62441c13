from fractions import Fraction
from math import isclose, log, pi, sqrt
from typing import Callable, Dict, List, Tuple

from irredcount.analysis.arithmetic import mobius_residual_h2
from irredcount.analysis.coefficients import c_mu_general, coefficients_top
from irredcount.analysis.prime_sums import g_value_inputs
from irredcount.counting.brute_force import brute_force_m
from irredcount.counting.ideals import count_m
from irredcount.fields.quadratic import make_field
from irredcount.fields.residues import GOLDEN_RATIO, class_field_data, residue
from irredcount.groups.abelian import cyclic_group, make_group
from irredcount.groups.zero_sums import davenport_constant
from irredcount.polynomials.cycle_index import evaluate_pk, power_sums, symmetric_sum_oracle
from irredcount.selftest.common import SelftestError, fail, info, success

ORACLE_FIELDS = (-5, -15, -1, -2)
ORACLE_X = 100


def check_residues() -> None:
    if not isclose(residue(class_field_data(-5)), pi / sqrt(5), rel_tol=1e-12):
        fail("a_K for d=-5 differs from pi/sqrt(5)")
    if not isclose(residue(class_field_data(-15)), 2 * pi / sqrt(15), rel_tol=1e-12):
        fail("a_K for d=-15 differs from 2 pi/sqrt(15)")

    # each class field residue is the product over its three quadratic subfields
    l_real = 2 * log(GOLDEN_RATIO) / sqrt(5)
    for d, imaginary in ((-5, -1), (-15, -3)):
        product = (
            residue(class_field_data(d))
            * residue(class_field_data(imaginary))
            * l_real
        )
        if not isclose(residue(class_field_data(d, hilbert=True)), product, rel_tol=1e-12):
            fail(f"Hilbert class field residue for d={d} differs from the L-value product")
    success("Zeta residues")


def check_davenport() -> None:
    for h in range(1, 9):
        if davenport_constant(cyclic_group(h)) != h:
            fail(f"D(C{h}) != {h}")
    if davenport_constant(make_group([2, 2])) != 3:
        fail("D(C2 x C2) != 3")
    success("Davenport constants of small groups")


def check_cycle_index() -> None:
    x = [Fraction(1), Fraction(1, 2), Fraction(1, 3)]
    for k in range(1, 5):
        if evaluate_pk(k, power_sums(x, k)) != symmetric_sum_oracle(k, x):
            fail(f"P_{k} disagrees with the symmetric-sum oracle")
    success("Cycle-index polynomials against exhaustive symmetric sums")


def check_coefficients() -> None:
    group = make_group([2, 2])
    g = [0.3, -0.1, 0.25, 0.7]
    z = [[0.2, 0.05], [0.1, 0.01], [0.4, 0.02], [0.3, 0.03]]
    top = coefficients_top(group, g, [row[0] for row in z])
    D = top.davenport
    for mu, expected in ((D, top.c_d), (D - 1, top.c_dm1), (D - 2, top.c_dm2)):
        if not isclose(c_mu_general(group, mu, g, z), expected, rel_tol=1e-12, abs_tol=1e-12):
            fail(f"c_{mu} full expansion disagrees with the closed form")
    success("Coefficient closed forms")


def check_counting() -> None:
    for d in ORACLE_FIELDS:
        field = make_field(d)
        exact = count_m(field, ORACLE_X).M
        oracle = brute_force_m(field, ORACLE_X).M
        if exact != oracle:
            fail(f"d={d}: census M({ORACLE_X}) = {exact}, oracle = {oracle}")
    success(f"Ideal census against the element oracle up to x = {ORACLE_X}")


def check_mobius_identity() -> None:
    for d in (-5, -15):
        residual = mobius_residual_h2(g_value_inputs(make_field(d)))
        if residual > 1e-12:
            fail(f"d={d}: Mobius-inverted g value off by {residual}")
    success("Mobius inversion of g_c(1)")


CHECKS: List[Tuple[str, Callable[[], None]]] = [
    ("residues", check_residues),
    ("davenport", check_davenport),
    ("cycle_index", check_cycle_index),
    ("coefficients", check_coefficients),
    ("counting", check_counting),
    ("mobius", check_mobius_identity),
]


def run_selftest() -> Dict[str, Dict[str, object]]:
    info("")
    info("=" * 70)
    info("IRREDCOUNT SELFTEST")
    info("=" * 70)
    info("")

    results: Dict[str, Dict[str, object]] = {}
    for name, check in CHECKS:
        try:
            check()
            results[name] = {"status": "passed", "error": None}
        except SelftestError as e:
            results[name] = {"status": "failed", "error": str(e)}
        except Exception as e:
            info(f"❌ Unexpected error in {name}: {e}")
            results[name] = {"status": "error", "error": str(e)}

    info("")
    return results
