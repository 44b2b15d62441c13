"""Element-level oracle for M(x): enumerate lattice points, test divisibility directly."""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Set

from sympy import divisors, factorint

from irredcount.core.report import CountReport
from irredcount.fields.quadratic import Coordinates, ImaginaryQuadraticField, kronecker

ORACLE_CAP = 2000


@dataclass(frozen=True, order=True)
class AlgebraicInteger:
    """a + b*omega together with its norm."""

    norm: int
    a: int
    b: int

    @property
    def coordinates(self) -> Coordinates:
        return self.a, self.b


def _associate_classes(field: ImaginaryQuadraticField, bound: int) -> Dict[int, List[Coordinates]]:
    """One representative per associate class, grouped by norm."""
    by_norm: Dict[int, Set[Coordinates]] = defaultdict(set)
    for a, b, n in field.elements_with_norm_at_most(bound):
        by_norm[n].add(field.associate_key((a, b)))
    return {n: sorted(keys) for n, keys in by_norm.items()}


def is_irreducible(
    field: ImaginaryQuadraticField,
    alpha: Coordinates,
    classes: Dict[int, List[Coordinates]],
) -> bool:
    """No beta with 1 < N(beta) < N(alpha) divides alpha; `classes` must cover N(alpha)."""
    n = field.norm(*alpha)
    if n <= 1:
        return False
    for d in divisors(n)[1:-1]:
        for beta in classes.get(d, ()):
            if field.divides(beta, alpha):
                return False
    return True


def irreducible_generators(field: ImaginaryQuadraticField, x: float) -> List[AlgebraicInteger]:
    """Non-associate irreducibles with norm <= x, ordered by (norm, a, b)."""
    if x > ORACLE_CAP:
        raise ValueError(f"Brute-force oracle is capped at x <= {ORACLE_CAP}, got {x}")
    bound = int(x)
    if bound < 2:
        return []

    classes = _associate_classes(field, bound)
    found = [
        AlgebraicInteger(norm=n, a=key[0], b=key[1])
        for n, keys in classes.items()
        if n > 1
        for key in keys
        if is_irreducible(field, key, classes)
    ]
    return sorted(found)


def generates_prime(field: ImaginaryQuadraticField, element: AlgebraicInteger) -> bool:
    """(alpha) is a prime ideal: prime norm, or norm p^2 with p inert."""
    factors = factorint(element.norm)
    if sum(factors.values()) == 1:
        return True
    if len(factors) == 1 and sum(factors.values()) == 2:
        (p,) = factors
        # alpha ~ p exactly when p is inert
        return kronecker(field.discriminant, p) == -1
    return False


def brute_force_m(field: ImaginaryQuadraticField, x: float) -> CountReport:
    irreducibles = irreducible_generators(field, x)
    P = sum(1 for element in irreducibles if generates_prime(field, element))
    return CountReport(
        d=field.d,
        x=float(x),
        M=len(irreducibles),
        P=P,
        pair_count=len(irreducibles) - P,
        method="brute_force",
    )
