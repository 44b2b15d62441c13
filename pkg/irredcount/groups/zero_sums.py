from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

from irredcount.groups.abelian import (
    MAX_GROUP_ORDER,
    FiniteAbelianGroup,
    GroupElement,
    cyclic_group,
)


@dataclass(frozen=True)
class ZeroSumPattern:
    """A multiset of group elements stored as sorted (element, count) pairs."""

    counts: Tuple[Tuple[GroupElement, int], ...]

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def multiplicities(self, group: FiniteAbelianGroup) -> List[int]:
        """The tuple (k_1, ..., k_h) indexed by the canonical class order of `group`."""
        k = [0] * group.order
        for element, count in self.counts:
            k[group.index_of(element)] = count
        return k

    def to_dict(self) -> Dict[str, object]:
        return {
            "total": self.total,
            "counts": [{"element": list(e.exponents), "count": c} for e, c in self.counts],
        }

    @classmethod
    def from_elements(cls, elements: Iterable[GroupElement]) -> "ZeroSumPattern":
        counter = Counter(elements)
        return cls(tuple(sorted((e, c) for e, c in counter.items() if c > 0)))


def _pattern_from_indices(group: FiniteAbelianGroup, indices: Sequence[int]) -> ZeroSumPattern:
    return ZeroSumPattern.from_elements(group.elements[i] for i in indices)


def is_minimal_zero_sum(group: FiniteAbelianGroup, pattern: ZeroSumPattern) -> bool:
    """Zero sum with no proper nonempty zero-sum sub-multiset (DP over (sum, size) states)."""
    m = pattern.total
    if m == 0:
        return False

    add = group.addition_table
    total = 0
    states = {(0, 0)}
    for element, count in pattern.counts:
        g = group.index_of(element)
        for _ in range(count):
            total = add[total][g]
            states |= {(add[s][g], k + 1) for s, k in states}

    if total != 0:
        return False
    return not any(s == 0 and 0 < k < m for s, k in states)


@lru_cache(maxsize=64)
def _patterns_up_to(group: FiniteAbelianGroup, max_m: int) -> Dict[int, Tuple[ZeroSumPattern, ...]]:
    # A minimal zero-sum multiset of size m is a zero-sum-free multiset of size m - 1
    # closed by the negative of its sum; walking zero-sum-free multisets in canonical
    # order and closing only with an element >= the last one yields each pattern once.
    n = group.order
    add = group.addition_table
    neg = group.negation_table

    found: Dict[int, List[Tuple[int, ...]]] = {m: [] for m in range(1, max_m + 1)}
    if max_m >= 1:
        found[1].append((0,))

    def walk(seq: List[int], sums: frozenset, total: int) -> None:
        if seq:
            last = neg[total]
            if last >= seq[-1] and len(seq) + 1 <= max_m:
                found[len(seq) + 1].append(tuple(seq) + (last,))

        if len(seq) + 2 > max_m:
            return

        start = seq[-1] if seq else 1
        for g in range(start, n):
            if neg[g] in sums:
                continue
            grown = frozenset(sums | {add[s][g] for s in sums} | {g})
            seq.append(g)
            walk(seq, grown, add[total][g])
            seq.pop()

    walk([], frozenset(), 0)

    return {
        m: tuple(_pattern_from_indices(group, idx) for idx in sorted(seqs))
        for m, seqs in found.items()
    }


def _check_size(group: FiniteAbelianGroup, m: int) -> None:
    if m < 1:
        raise ValueError(f"Pattern size must be positive, got m={m}")
    if m > MAX_GROUP_ORDER or group.order > MAX_GROUP_ORDER:
        raise ValueError(
            f"Enumeration is capped at |G| <= {MAX_GROUP_ORDER} and m <= {MAX_GROUP_ORDER}"
        )


def patterns_by_size(
    group: FiniteAbelianGroup, max_m: int
) -> Dict[int, Tuple[ZeroSumPattern, ...]]:
    """D_1, ..., D_max_m in one search."""
    _check_size(group, max_m)
    return _patterns_up_to(group, min(max_m, group.order))


def enumerate_minimal_zero_sums(
    group: FiniteAbelianGroup, m: int
) -> Tuple[ZeroSumPattern, ...]:
    """The set D_m of minimal zero-sum patterns of total m, in canonical order."""
    _check_size(group, m)
    if m > group.order:
        # D(G) <= |G|
        return ()
    patterns = _patterns_up_to(group, m)[m]
    for pattern in patterns:
        if not is_minimal_zero_sum(group, pattern):
            raise RuntimeError(f"Walk produced a non-minimal pattern {pattern.to_dict()}")
    return patterns


def davenport_constant(group: FiniteAbelianGroup) -> int:
    by_size = patterns_by_size(group, group.order)
    return max(m for m, patterns in by_size.items() if patterns)


def cyclic_extremal_patterns(
    h: int,
) -> Tuple[Tuple[ZeroSumPattern, ...], Tuple[ZeroSumPattern, ...]]:
    """Closed-form (D_h, D_{h-1}) of the cyclic group of order h."""
    if h < 2:
        raise ValueError(f"Cyclic extremal patterns need h >= 2, got {h}")

    group = cyclic_group(h)
    c = group.element((1,))

    top = set()
    below = set()
    for k in range(1, h + 1):
        if gcd(k, h) != 1:
            continue
        ck = group.scale(k, c)
        top.add(ZeroSumPattern.from_elements([ck] * h))
        below.add(ZeroSumPattern.from_elements([ck] * (h - 2) + [group.scale(2 * k, c)]))

    return tuple(sorted(top, key=lambda p: p.counts)), tuple(sorted(below, key=lambda p: p.counts))
