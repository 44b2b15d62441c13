"""Truncated sums over prime ideals of a class, and the constants g_c(1) built from them.

Near s = 1 the prime ideals of a class c satisfy
    sum_{p in c} Np^{-s} = (1/h) log(1/(s - 1)) + g_c(s),
and for class number <= 2 the value g_c(1) is fixed by the zeta residues of K and of its
Hilbert class field L together with a rapidly convergent tail over prime ideals.
"""

from dataclasses import dataclass
from math import atanh, ceil, fsum, log, log1p, sqrt
from typing import List

from irredcount.core.bounded import TruncatedSum
from irredcount.core.errors import UnsupportedFieldError
from irredcount.fields.primes import PrimeIdealRecord, prime_ideals_up_to
from irredcount.fields.quadratic import ImaginaryQuadraticField
from irredcount.fields.residues import (
    class_field_data,
    has_class_field_data,
    imaginary_quadratic_residue,
    residue,
)

DEFAULT_TOLERANCE = 5e-5


def _require_small_class_number(field: ImaginaryQuadraticField) -> None:
    if field.h > 2:
        raise UnsupportedFieldError(
            f"{field.label} has class number {field.h}; per-class sums need h <= 2"
        )


def _records_below(
    field: ImaginaryQuadraticField, x: float, workers: int = 1
) -> List[PrimeIdealRecord]:
    # strict cutoff: Np < x
    return [r for r in prime_ideals_up_to(field, x, workers=workers) if r.norm < x]


def tail_sum_s(
    field: ImaginaryQuadraticField,
    x: float,
    want_principal: bool = False,
    workers: int = 1,
) -> TruncatedSum:
    """Higher-power part of log zeta restricted to one class, truncated at Np < x.

    Nonprincipal class: sum of sum_{m >= 3 odd} 1/(m Np^m) = atanh(1/Np) - 1/Np.
    Principal class: sum_{m >= 2} 1/(m Np^m) over principal prime ideals, plus the even
    powers sum_{m >= 2 even} 1/(m Np^m) of the nonprincipal ones (their squares are
    principal).
    """
    if x <= 3:
        raise ValueError(f"Truncation needs x > 3 for the tail bound to hold, got {x}")
    _require_small_class_number(field)

    terms = []
    for record in _records_below(field, x, workers=workers):
        n = record.norm
        if want_principal:
            if record.principal:
                terms.append(record.ideals_above * (-log1p(-1 / n) - 1 / n))
            else:
                terms.append(record.ideals_above * -0.5 * log1p(-1 / (n * n)))
        elif not record.principal:
            terms.append(record.ideals_above * (atanh(1 / n) - 1 / n))

    if want_principal:
        bound = 1 / (x - 2)
    else:
        bound = 1 / (3 * (x - 2) ** 2)
    return TruncatedSum(value=fsum(terms), cutoff=x, error_bound=bound)


def power_sum_z(
    field: ImaginaryQuadraticField,
    nonprincipal: bool,
    j: int,
    x: float,
    workers: int = 1,
) -> TruncatedSum:
    """z_{c,j} = sum_{p in c} Np^{-j} for the principal or the nonprincipal class."""
    if j < 2:
        raise ValueError(f"Power sums need j >= 2 (j = 1 diverges at s = 1), got {j}")
    if x <= 3:
        raise ValueError(f"Truncation needs x > 3, got {x}")
    _require_small_class_number(field)

    terms = [
        r.ideals_above * float(r.norm) ** -j
        for r in _records_below(field, x, workers=workers)
        if bool(r.principal) != nonprincipal
    ]
    bound = 2 * (x - 1) ** (1 - j) / (j - 1)
    return TruncatedSum(value=fsum(terms), cutoff=x, error_bound=bound)


def cutoff_for_tolerance(tolerance: float, kind: str = "nonprincipal") -> int:
    """Smallest integer cutoff whose tail bound is below `tolerance`."""
    if tolerance <= 0:
        raise ValueError(f"Tolerance must be positive, got {tolerance}")
    if kind == "nonprincipal":
        x = ceil(2 + 1 / sqrt(3 * tolerance))
    elif kind == "principal":
        x = ceil(2 + 1 / tolerance)
    elif kind == "power":
        x = ceil(1 + 2 / tolerance)
    else:
        raise ValueError(f"Unknown tail kind {kind!r}")
    return max(x, 4)


@dataclass(frozen=True)
class GValueInputs:
    a_K: float
    a_L: float
    S: TruncatedSum

    def __post_init__(self):
        if self.a_K <= 0 or self.a_L <= 0:
            raise ValueError(f"Residues must be positive, got a_K={self.a_K}, a_L={self.a_L}")

    @property
    def log_part(self) -> float:
        return log(self.a_K) - 0.5 * log(self.a_L)

    def to_dict(self):
        return {"a_K": self.a_K, "a_L": self.a_L, "S": self.S.to_dict()}


def g_value_h2(inputs: GValueInputs) -> TruncatedSum:
    """g_c(1) = log a_K - (1/2) log a_L - S for the nonprincipal class c."""
    return TruncatedSum(
        value=inputs.log_part - inputs.S.value,
        cutoff=inputs.S.cutoff,
        error_bound=inputs.S.error_bound,
    )


def g_value_inputs(
    field: ImaginaryQuadraticField,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> GValueInputs:
    if field.h != 2:
        raise UnsupportedFieldError(f"{field.label} has class number {field.h}, expected 2")
    if not has_class_field_data(field.d):
        raise UnsupportedFieldError(f"No Hilbert class field data for {field.label}")

    x = cutoff_for_tolerance(tolerance)
    return GValueInputs(
        a_K=residue(class_field_data(field.d)),
        a_L=residue(class_field_data(field.d, hilbert=True)),
        S=tail_sum_s(field, x, workers=workers),
    )


def g_value_principal(
    field: ImaginaryQuadraticField,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> TruncatedSum:
    """g_1(1) for the principal class: (1/h) log a_F - S_0, F = K (h = 1) or L (h = 2)."""
    _require_small_class_number(field)

    if field.h == 1:
        log_part = log(imaginary_quadratic_residue(field))
    elif has_class_field_data(field.d):
        log_part = 0.5 * log(residue(class_field_data(field.d, hilbert=True)))
    else:
        raise UnsupportedFieldError(f"No Hilbert class field data for {field.label}")

    s0 = tail_sum_s(
        field, cutoff_for_tolerance(tolerance, kind="principal"), want_principal=True,
        workers=workers,
    )
    return TruncatedSum(value=log_part - s0.value, cutoff=s0.cutoff, error_bound=s0.error_bound)


def class_g_values(
    field: ImaginaryQuadraticField,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> List[TruncatedSum]:
    """g values in canonical class order: principal class first."""
    values = [g_value_principal(field, tolerance, workers=workers)]
    if field.h == 2:
        values.append(g_value_h2(g_value_inputs(field, tolerance, workers=workers)))
    return values


def class_z2_values(
    field: ImaginaryQuadraticField,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> List[TruncatedSum]:
    x = cutoff_for_tolerance(tolerance, kind="power")
    values = [power_sum_z(field, nonprincipal=False, j=2, x=x, workers=workers)]
    if field.h == 2:
        values.append(power_sum_z(field, nonprincipal=True, j=2, x=x, workers=workers))
    return values
