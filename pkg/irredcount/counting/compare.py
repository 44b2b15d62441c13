from typing import List, Optional, Sequence

from irredcount.analysis.coefficients import field_coefficients
from irredcount.analysis.prime_sums import DEFAULT_TOLERANCE
from irredcount.core.report import CoefficientSet, CountReport
from irredcount.counting.ideals import build_census, with_prediction
from irredcount.fields.quadratic import ImaginaryQuadraticField


def compare_report(
    field: ImaginaryQuadraticField,
    xs: Sequence[float],
    coefficients: Optional[CoefficientSet] = None,
    tolerance: float = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> List[CountReport]:
    """Exact M(x) next to the two-term prediction for each x, in ascending x."""
    if not xs:
        return []
    if coefficients is None:
        coefficients = field_coefficients(field, tolerance, workers=workers)

    census = build_census(field, max(xs), workers=workers)
    return [with_prediction(census.count(x), coefficients) for x in sorted(xs)]
