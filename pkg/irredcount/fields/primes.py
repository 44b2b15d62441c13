import heapq
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import List, Optional

import numpy as np
from sympy import isprime

from irredcount.core.errors import UnsupportedFieldError
from irredcount.core.splitting import SPLITTING_BY_SYMBOL, Splitting
from irredcount.fields.quadratic import ImaginaryQuadraticField, kronecker

PRIME_CAP = 10**9

# odd numbers per sieve block
SEGMENT_ODD_COUNT = 4_000_000

# Nonprincipal split residue classes mod |d_K|, as derived from a^2 + 5b^2 and
# ((2a + b)^2 + 15b^2)/4 by genus theory.
KNOWN_NONPRINCIPAL_SPLIT = {
    -5: (3, 7),
    -15: (2, 8),
}


@dataclass(frozen=True)
class PrimeIdealRecord:
    """The prime ideal(s) of one norm lying above a rational prime p."""

    p: int
    splitting: Splitting
    norm: int
    ideals_above: int
    principal: Optional[bool] = None

    def to_dict(self):
        return {
            "p": self.p,
            "splitting": self.splitting.value,
            "norm": self.norm,
            "ideals_above": self.ideals_above,
            "principal": self.principal,
        }


# ------------------------
# Sieve
# ------------------------


def _base_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _sieve_block(low: int, high: int, base: np.ndarray) -> np.ndarray:
    """Odd primes in [low, high), low odd."""
    count = (high - low + 1) // 2
    mask = np.ones(count, dtype=bool)

    for p in base:
        p = int(p)
        if p == 2:
            continue
        if p * p >= high:
            break
        start = max(p * p, ((low + p - 1) // p) * p)
        if start % 2 == 0:
            start += p
        if start >= high:
            continue
        mask[(start - low) // 2 :: p] = False

    return low + 2 * np.flatnonzero(mask).astype(np.int64)


def primes_up_to(limit: int, workers: int = 1) -> np.ndarray:
    """All primes <= limit, ascending, independent of `workers`."""
    limit = int(limit)
    if limit > PRIME_CAP:
        raise ValueError(f"Sieve limit {limit} exceeds the cap {PRIME_CAP}")
    if limit < 2:
        return np.array([], dtype=np.int64)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    base = _base_primes(isqrt(limit))
    span = 2 * SEGMENT_ODD_COUNT
    blocks = [(low, min(low + span, limit + 1)) for low in range(3, limit + 1, span)]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(lambda b: _sieve_block(b[0], b[1], base), blocks))

    return np.concatenate([np.array([2], dtype=np.int64), *chunks])


# ------------------------
# Splitting and principality by residue class
# ------------------------


@lru_cache(maxsize=None)
def kronecker_table(discriminant: int) -> np.ndarray:
    """(D/r) for r = 0 .. |D| - 1; (D/.) is periodic mod |D| for a fundamental D."""
    modulus = -discriminant
    table = np.zeros(modulus, dtype=np.int8)
    for r in range(1, modulus):
        table[r] = kronecker(discriminant, r)
    return table


def _represented_residue(field: ImaginaryQuadraticField, r: int) -> bool:
    modulus = -field.discriminant
    p = r
    while not isprime(p):
        p += modulus
    return field.principal_form_represents(p)


@lru_cache(maxsize=None)
def principal_residue_table(field: ImaginaryQuadraticField) -> np.ndarray:
    """True at residues r mod |D| whose split primes have principal prime ideals.

    For h = 2 the class of a split prime is fixed by its genus, so one prime per
    residue class decides the whole class.
    """
    if field.h > 2:
        raise UnsupportedFieldError(
            f"{field.label} has class number {field.h}; principality needs h <= 2"
        )

    chi = kronecker_table(field.discriminant)
    table = chi == 1
    if field.h == 1:
        return table

    known = KNOWN_NONPRINCIPAL_SPLIT.get(field.d)
    for r in np.flatnonzero(table):
        r = int(r)
        if known is not None:
            table[r] = r not in known
        else:
            table[r] = _represented_residue(field, r)
    return table


def is_principal(field: ImaginaryQuadraticField, record: PrimeIdealRecord) -> bool:
    if field.h > 2:
        raise UnsupportedFieldError(
            f"{field.label} has class number {field.h}; principality needs h <= 2"
        )
    if field.h == 1 or record.splitting is Splitting.INERT:
        return True
    if record.splitting is Splitting.RAMIFIED:
        return field.principal_form_represents(record.p)
    return bool(principal_residue_table(field)[record.p % -field.discriminant])


# ------------------------
# Prime ideal streams
# ------------------------


@dataclass(frozen=True, eq=False)
class PrimeArrays:
    """Vectorised view of the rational primes <= limit with their splitting data."""

    primes: np.ndarray
    symbol: np.ndarray
    principal: np.ndarray

    @property
    def split(self) -> np.ndarray:
        return self.symbol == 1

    @property
    def inert(self) -> np.ndarray:
        return self.symbol == -1

    @property
    def ramified(self) -> np.ndarray:
        return self.symbol == 0


def prime_arrays(field: ImaginaryQuadraticField, limit: int, workers: int = 1) -> PrimeArrays:
    primes = primes_up_to(limit, workers=workers)
    modulus = -field.discriminant
    residues = primes % modulus
    symbol = kronecker_table(field.discriminant)[residues]

    if field.h > 2:
        principal = np.zeros(len(primes), dtype=bool)
    elif field.h == 1:
        principal = np.ones(len(primes), dtype=bool)
    else:
        principal = principal_residue_table(field)[residues] | (symbol == -1)
        for i in np.flatnonzero(symbol == 0):
            principal[i] = field.principal_form_represents(int(primes[i]))

    return PrimeArrays(primes=primes, symbol=symbol, principal=principal)


def prime_ideals_up_to(
    field: ImaginaryQuadraticField, x: float, workers: int = 1
) -> List[PrimeIdealRecord]:
    """Prime ideal records with norm <= x, in norm order."""
    if x > PRIME_CAP:
        raise ValueError(f"x = {x} exceeds the sieve cap {PRIME_CAP}")
    if x < 2:
        return []

    limit = int(x)
    arrays = prime_arrays(field, limit, workers=workers)
    with_principal = field.h <= 2

    def record(p: int, symbol: int, principal: bool) -> PrimeIdealRecord:
        kind = SPLITTING_BY_SYMBOL[symbol]
        return PrimeIdealRecord(
            p=p,
            splitting=kind,
            norm=p * p if kind is Splitting.INERT else p,
            ideals_above=2 if kind is Splitting.SPLIT else 1,
            principal=principal if with_principal else None,
        )

    rows = zip(arrays.primes.tolist(), arrays.symbol.tolist(), arrays.principal.tolist())
    records = [record(p, s, pr) for p, s, pr in rows]

    degree_one = (r for r in records if r.splitting is not Splitting.INERT)
    degree_two = (
        r for r in records if r.splitting is Splitting.INERT and r.norm <= limit
    )
    return list(heapq.merge(degree_one, degree_two, key=lambda r: (r.norm, r.p)))

