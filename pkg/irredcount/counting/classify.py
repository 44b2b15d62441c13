from sympy import factorint

from irredcount.core.element_kind import ElementKind
from irredcount.core.errors import UnsupportedFieldError
from irredcount.core.splitting import SPLITTING_BY_SYMBOL, Splitting
from irredcount.fields.primes import PrimeIdealRecord, is_principal
from irredcount.fields.quadratic import ImaginaryQuadraticField, kronecker


def _degree_one_principal(field: ImaginaryQuadraticField, p: int) -> bool:
    kind = SPLITTING_BY_SYMBOL[kronecker(field.discriminant, p)]
    record = PrimeIdealRecord(
        p=p, splitting=kind, norm=p, ideals_above=2 if kind is Splitting.SPLIT else 1
    )
    return is_principal(field, record)


def classify_element(field: ImaginaryQuadraticField, a: int, b: int) -> ElementKind:
    """Classify a + b*omega from the factorisation of its norm.

    For h <= 2 the ideal (alpha) is irreducible exactly when it is a principal prime or
    a product of two nonprincipal prime ideals.
    """
    if field.h > 2:
        raise UnsupportedFieldError(
            f"{field.label} has class number {field.h}; classification needs h <= 2"
        )

    n = field.norm(a, b)
    if n == 0:
        return ElementKind.ZERO
    if n == 1:
        return ElementKind.UNIT

    factors = factorint(n)
    omega = sum(factors.values())
    if omega == 1:
        return ElementKind.PRIME

    inert = [p for p in factors if kronecker(field.discriminant, p) == -1]
    if inert:
        # an inert p divides alpha as a prime ideal of norm p^2
        return ElementKind.PRIME if factors == {inert[0]: 2} else ElementKind.REDUCIBLE

    if omega == 2 and not any(_degree_one_principal(field, p) for p in factors):
        return ElementKind.IRREDUCIBLE_NONPRIME
    return ElementKind.REDUCIBLE
