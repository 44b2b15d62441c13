"""Cycle-index polynomials P_k and their partial sums rho_{k,nu_1}.

P_k(z_1, ..., z_k) = sum over cycle types nu of S_k of
    z_1^{nu_1} ... z_k^{nu_k} / (nu_1! ... nu_k! 1^{nu_1} ... k^{nu_k}),
with P_0 = 1. Substituting power sums z_j = sum_i x_i^j gives the complete homogeneous
symmetric sum of degree k in the x_i.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Sequence, Tuple, Union

from sympy.utilities.iterables import partitions

MAX_DEGREE = 20
ORACLE_MAX_DEGREE = 6
ORACLE_MAX_VARIABLES = 8

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class CycleType:
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        if any(nu < 0 for nu in self.multiplicities):
            raise ValueError(f"Negative cycle multiplicity in {self.multiplicities}")

    @property
    def degree(self) -> int:
        return sum(j * nu for j, nu in enumerate(self.multiplicities, start=1))

    def coefficient(self) -> Fraction:
        denom = 1
        for j, nu in enumerate(self.multiplicities, start=1):
            denom *= factorial(nu) * j**nu
        return Fraction(1, denom)


@dataclass(frozen=True)
class CycleTypeTable:
    k: int
    terms: Tuple[Tuple[CycleType, Fraction], ...]

    def class_sizes(self) -> Tuple[int, ...]:
        """Conjugacy class sizes k! * coefficient; they sum to k!."""
        return tuple(int(factorial(self.k) * c) for _, c in self.terms)


@lru_cache(maxsize=None)
def _partitions(n: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    if n == 0:
        return ((),)
    # sympy reuses the yielded dict
    return tuple(tuple(sorted(p.items())) for p in partitions(n))


def cycle_types(k: int) -> Tuple[CycleType, ...]:
    if not 1 <= k <= MAX_DEGREE:
        raise ValueError(f"Cycle types are tabulated for 1 <= k <= {MAX_DEGREE}, got {k}")

    types = []
    for parts in _partitions(k):
        nu = [0] * k
        for j, mult in parts:
            nu[j - 1] = mult
        types.append(CycleType(tuple(nu)))
    return tuple(sorted(types, key=lambda t: t.multiplicities, reverse=True))


@lru_cache(maxsize=None)
def pk_table(k: int) -> CycleTypeTable:
    if not 0 <= k <= MAX_DEGREE:
        raise ValueError(f"P_k is tabulated for 0 <= k <= {MAX_DEGREE}, got {k}")
    if k == 0:
        return CycleTypeTable(k=0, terms=((CycleType(()), Fraction(1)),))
    return CycleTypeTable(k=k, terms=tuple((t, t.coefficient()) for t in cycle_types(k)))


def evaluate_pk(k: int, z: Sequence[Number]) -> Number:
    """P_k at (z_1, ..., z_k); exact when the z_j are Fractions."""
    if len(z) < k:
        raise ValueError(f"P_{k} needs {k} values, got {len(z)}")

    total: Number = 0
    for cycle_type, coeff in pk_table(k).terms:
        total += coeff * prod(z[j] ** nu for j, nu in enumerate(cycle_type.multiplicities) if nu)
    return total


def rho(k: int, nu1: int, z: Sequence[Number]) -> Number:
    """rho_{k,nu1}: the P_k terms with fixed nu_1, without the z_1 factor.

    `z` holds z_2, z_3, ... (so z[0] is z_2). Boundary values rho_{0,0} = rho_{1,1} = 1 and
    rho_{1,0} = 0 fall out of the partition sum.
    """
    if not 0 <= nu1 <= k:
        raise ValueError(f"rho needs 0 <= nu1 <= k, got k={k}, nu1={nu1}")

    rest = k - nu1
    total: Number = 0
    for parts in _partitions(rest):
        if any(j == 1 for j, _ in parts):
            continue
        coeff = Fraction(1, prod(factorial(mult) * j**mult for j, mult in parts))
        if parts and len(z) < max(j for j, _ in parts) - 1:
            raise ValueError(f"rho_{{{k},{nu1}}} needs z_2..z_{k}, got {len(z)} values")
        total += coeff * prod(z[j - 2] ** mult for j, mult in parts)
    return total


def power_sums(x: Sequence[Number], k: int) -> Tuple[Number, ...]:
    return tuple(sum(xi**j for xi in x) for j in range(1, k + 1))


def symmetric_sum_oracle(k: int, x: Sequence[Number]) -> Number:
    """Sum over n_1 <= ... <= n_k of x_{n_1} ... x_{n_k}, by exhaustive enumeration."""
    if not 1 <= k <= ORACLE_MAX_DEGREE or len(x) > ORACLE_MAX_VARIABLES:
        raise ValueError(
            f"Oracle is limited to 1 <= k <= {ORACLE_MAX_DEGREE} and "
            f"{ORACLE_MAX_VARIABLES} variables, got k={k}, {len(x)} variables"
        )

    total: Number = 0
    for combo in combinations_with_replacement(range(len(x)), k):
        total += prod(x[i] for i in combo)
    return total
