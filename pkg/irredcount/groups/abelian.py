from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Dict, List, Sequence, Tuple

from sympy import factorint

# D_m enumeration is exponential in |G|
MAX_GROUP_ORDER = 64


@dataclass(frozen=True, order=True)
class GroupElement:
    exponents: Tuple[int, ...]

    def __str__(self) -> str:
        if not self.exponents:
            return "()"
        return "(" + ",".join(str(e) for e in self.exponents) + ")"


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group C_{n_1} x ... x C_{n_r} with n_1 | n_2 | ... | n_r."""

    invariant_factors: Tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return self.rank <= 1

    @cached_property
    def elements(self) -> Tuple[GroupElement, ...]:
        """All elements, lexicographic on exponent vectors; index 0 is the identity."""
        ranges = [range(n) for n in self.invariant_factors]
        return tuple(GroupElement(tuple(e)) for e in product(*ranges))

    @cached_property
    def _index(self) -> Dict[GroupElement, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def addition_table(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(
            tuple(self.index_of(self.add(a, b)) for b in self.elements) for a in self.elements
        )

    @cached_property
    def negation_table(self) -> Tuple[int, ...]:
        return tuple(self.index_of(self.negate(a)) for a in self.elements)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(tuple(0 for _ in self.invariant_factors))

    def index_of(self, element: GroupElement) -> int:
        return self._index[element]

    def element(self, exponents: Sequence[int]) -> GroupElement:
        if len(exponents) != self.rank:
            raise ValueError(
                f"Expected {self.rank} exponents for {self.label()}, got {len(exponents)}"
            )
        return GroupElement(tuple(e % n for e, n in zip(exponents, self.invariant_factors)))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return GroupElement(
            tuple((x + y) % n for x, y, n in zip(a.exponents, b.exponents, self.invariant_factors))
        )

    def negate(self, a: GroupElement) -> GroupElement:
        return GroupElement(tuple((-x) % n for x, n in zip(a.exponents, self.invariant_factors)))

    def scale(self, k: int, a: GroupElement) -> GroupElement:
        return GroupElement(tuple((k * x) % n for x, n in zip(a.exponents, self.invariant_factors)))

    def label(self) -> str:
        if not self.invariant_factors:
            return "C1"
        return " x ".join(f"C{n}" for n in self.invariant_factors)


def invariant_factor_form(orders: Sequence[int]) -> List[int]:
    """Invariant factors of C_{a_1} x ... x C_{a_k} for arbitrary cyclic orders a_i >= 1."""
    prime_powers: Dict[int, List[int]] = {}
    for n in orders:
        for p, e in factorint(n).items():
            prime_powers.setdefault(p, []).append(p**e)

    width = max((len(v) for v in prime_powers.values()), default=0)
    factors = [1] * width
    for powers in prime_powers.values():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            factors[width - 1 - i] *= q
    return [f for f in factors if f > 1]


def make_group(invariant_factors: Sequence[int]) -> FiniteAbelianGroup:
    factors = [int(n) for n in invariant_factors]

    for n in factors:
        if n < 2:
            raise ValueError(f"Invariant factors must be >= 2, got {n}")

    for a, b in zip(factors, factors[1:]):
        if b % a != 0:
            hint = invariant_factor_form(factors)
            raise ValueError(
                f"Invariant factors {factors} do not form a divisibility chain; "
                f"the same group is {hint}"
            )

    group = FiniteAbelianGroup(tuple(factors))
    if group.order > MAX_GROUP_ORDER:
        raise ValueError(
            f"Group order {group.order} exceeds the enumeration cap of {MAX_GROUP_ORDER}"
        )
    return group


def cyclic_group(h: int) -> FiniteAbelianGroup:
    if h < 1:
        raise ValueError(f"Cyclic group order must be positive, got {h}")
    return make_group([] if h == 1 else [h])
