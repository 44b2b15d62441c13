from math import gcd, log
from typing import Dict, Optional

from sympy import mobius as _mobius
from sympy import totient as _totient

from irredcount.analysis.prime_sums import GValueInputs, g_value_h2


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    return int(_mobius(n))


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient needs n >= 1, got {n}")
    return int(_totient(n))


def ramanujan_sum(h: int, j: int) -> int:
    """c_h(j) = sum over k coprime to h of exp(2 pi i j k / h), via phi(h) mu(q) / phi(q)."""
    if h < 1:
        raise ValueError(f"Ramanujan sums need h >= 1, got {h}")
    q = h // gcd(h, j)
    return totient(h) * mobius(q) // totient(q)


def mobius_residual_h2(
    inputs: GValueInputs, subfield_residues: Optional[Dict[int, float]] = None
) -> float:
    """|g_c(1) - (sum_{d | 2} mu(d)/d log a_{L_d} - S)| with L_1 = K and L_2 = L.

    `subfield_residues` maps d to a_{L_d}; it defaults to the residues carried by `inputs`.
    """
    residues = subfield_residues or {1: inputs.a_K, 2: inputs.a_L}
    missing = {1, 2} - set(residues)
    if missing:
        raise ValueError(f"Missing subfield residues for d in {sorted(missing)}")

    inverted = sum(mobius(d) / d * log(residues[d]) for d in (1, 2)) - inputs.S.value
    return abs(g_value_h2(inputs).value - inverted)
