"""Constants turning a log-power expansion at s = 1 into a loglog-power expansion of x.

If F(s) = sum_{nu=0}^{k} g_nu(s) log(1/(s - 1))^nu near s = 1, the coefficients of F
sum to (x / log x) * sum_{j<k} e_j (log log x)^j + lower order, with

    e_j = sum_{nu=j}^{k} (nu! / j!) g_nu(1) I_{nu-j},

where sum_{m>=1} I_m t^(m-1) = 1/Gamma(1 + t).
"""

from dataclasses import dataclass, field
from math import factorial, fsum
from typing import List, Sequence

import mpmath

EULER_GAMMA = float(mpmath.euler)

MAX_I_ORDER = 30

# working precision for the power-series exponential
_DPS = 40


def im_constants(max_m: int) -> List[float]:
    """I_0, ..., I_max_m with I_0 = 0 and I_m = [t^(m-1)] exp(gamma t + sum (-1)^(n-1) zeta(n) t^n / n)."""
    if not 0 <= max_m <= MAX_I_ORDER:
        raise ValueError(f"I_m is tabulated for 0 <= m <= {MAX_I_ORDER}, got {max_m}")

    with mpmath.workdps(_DPS):
        n_terms = max(max_m, 1)
        a = [mpmath.mpf(0)] * n_terms
        if n_terms > 1:
            a[1] = +mpmath.euler
        for n in range(2, n_terms):
            a[n] = (-1) ** (n - 1) * mpmath.zeta(n) / n

        # n E_n = sum_{k=1}^{n} k a_k E_{n-k}
        series = [mpmath.mpf(1)] + [mpmath.mpf(0)] * (n_terms - 1)
        for n in range(1, n_terms):
            series[n] = mpmath.fsum(k * a[k] * series[n - k] for k in range(1, n + 1)) / n

        values = [0.0] + [float(v) for v in series]

    return values[: max_m + 1]


def e_coefficients(g_at_1: Sequence[float], k: int) -> List[float]:
    """e_0, ..., e_{k-1} from g_0(1), ..., g_k(1)."""
    if k < 1:
        raise ValueError(f"Expansion order k must be >= 1, got {k}")
    if len(g_at_1) != k + 1:
        raise ValueError(f"Expected {k + 1} values g_0..g_{k}, got {len(g_at_1)}")

    I = im_constants(k)
    return [
        fsum(
            factorial(nu) / factorial(j) * g_at_1[nu] * I[nu - j]
            for nu in range(j + 1, k + 1)
        )
        for j in range(k)
    ]


@dataclass
class TauberianConstants:
    I: List[float] = field(default_factory=list)
    e: List[float] = field(default_factory=list)

    @classmethod
    def compute(cls, g_at_1: Sequence[float], k: int) -> "TauberianConstants":
        return cls(I=im_constants(k), e=e_coefficients(g_at_1, k))

    def to_dict(self):
        return {"I": list(self.I), "e": list(self.e)}
