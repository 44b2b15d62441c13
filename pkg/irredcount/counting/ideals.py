"""Exact M(x) at the ideal level for class number <= 2.

For h <= 2 an irreducible element generates either a principal prime ideal or the product
of two nonprincipal prime ideals, so M(x) = P(x) + #{ {p, q} nonprincipal : Np Nq <= x }.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from irredcount.analysis.coefficients import asymptotic_prediction
from irredcount.core.errors import UnsupportedFieldError
from irredcount.core.report import CoefficientSet, CountReport
from irredcount.fields.primes import PRIME_CAP, prime_arrays
from irredcount.fields.quadratic import ImaginaryQuadraticField


def count_norm_pairs(norms: np.ndarray, x: int) -> int:
    """#{i <= j : a_i a_j <= x} over the ideal norms a (sorted here)."""
    a = np.sort(np.asarray(norms, dtype=np.int64))
    if len(a) == 0:
        return 0
    # for each i, the partners j >= i with a_j <= x // a_i
    upper = np.searchsorted(a, x // a, side="right")
    counts = upper - np.arange(len(a))
    return int(counts[counts > 0].sum())


@dataclass(frozen=True, eq=False)
class IdealCensus:
    """Sorted prime ideal norms of one field up to x_max, split by principality."""

    field: ImaginaryQuadraticField
    x_max: float
    principal_norms: np.ndarray
    nonprincipal_norms: np.ndarray

    def count(self, x: float) -> CountReport:
        if x > self.x_max:
            raise ValueError(f"x = {x} exceeds the census range {self.x_max}")
        limit = int(x) if x >= 0 else 0

        P = int(np.searchsorted(self.principal_norms, limit, side="right"))
        in_range = self.nonprincipal_norms[
            : np.searchsorted(self.nonprincipal_norms, limit // 2, side="right")
        ]
        pairs = count_norm_pairs(in_range, limit)
        return CountReport(d=self.field.d, x=float(x), M=P + pairs, P=P, pair_count=pairs)


def build_census(
    field: ImaginaryQuadraticField, x_max: float, workers: int = 1
) -> IdealCensus:
    if field.h > 2:
        raise UnsupportedFieldError(
            f"{field.label} has class number {field.h}; counting needs h <= 2"
        )
    if x_max > PRIME_CAP:
        raise ValueError(f"x = {x_max} exceeds the sieve cap {PRIME_CAP}")

    limit = max(int(x_max), 0)
    arrays = prime_arrays(field, limit, workers=workers)
    p = arrays.primes

    inert = p[arrays.inert]
    principal = np.concatenate(
        [
            np.repeat(p[arrays.split & arrays.principal], 2),
            p[arrays.ramified & arrays.principal],
            (inert * inert)[inert * inert <= limit],
        ]
    )
    nonprincipal = np.concatenate(
        [
            np.repeat(p[arrays.split & ~arrays.principal], 2),
            p[arrays.ramified & ~arrays.principal],
        ]
    )
    return IdealCensus(
        field=field,
        x_max=float(x_max),
        principal_norms=np.sort(principal),
        nonprincipal_norms=np.sort(nonprincipal),
    )


def with_prediction(report: CountReport, coefficients: Optional[CoefficientSet]) -> CountReport:
    if coefficients is None:
        return report
    prediction = asymptotic_prediction(coefficients, report.x)
    report.leading = prediction.leading
    report.predicted = prediction.predicted
    report.error_scale = prediction.error_scale
    if prediction.predicted:
        report.ratio = report.M / prediction.predicted
    return report


def count_m(
    field: ImaginaryQuadraticField,
    x: float,
    coefficients: Optional[CoefficientSet] = None,
    workers: int = 1,
) -> CountReport:
    """M(x), P(x) and the pair count; prediction fields filled when `coefficients` is given."""
    census = build_census(field, x, workers=workers)
    return with_prediction(census.count(x), coefficients)
