from dataclasses import dataclass
from math import log, pi, sqrt

from irredcount.core.errors import UnsupportedFieldError
from irredcount.fields.quadratic import ImaginaryQuadraticField, make_field

GOLDEN_RATIO = (1 + sqrt(5)) / 2


@dataclass(frozen=True)
class ResidueData:
    """Invariants entering the residue of the Dedekind zeta function at s = 1."""

    r1: int
    r2: int
    regulator: float
    h: int
    w: int
    discriminant: int

    def __post_init__(self):
        if self.r1 < 0 or self.r2 < 0:
            raise ValueError(f"Embedding counts must be >= 0, got r1={self.r1}, r2={self.r2}")
        if self.regulator <= 0:
            raise ValueError(f"Regulator must be positive, got {self.regulator}")
        if self.h < 1 or self.w < 1:
            raise ValueError(f"h and w must be positive, got h={self.h}, w={self.w}")
        if self.discriminant == 0:
            raise ValueError("Discriminant must be nonzero")


def residue(data: ResidueData) -> float:
    """a_F = 2^r1 (2 pi)^r2 R h / (w sqrt|d|)."""
    return (
        2**data.r1
        * (2 * pi) ** data.r2
        * data.regulator
        * data.h
        / (data.w * sqrt(abs(data.discriminant)))
    )


def imaginary_quadratic_data(field: ImaginaryQuadraticField) -> ResidueData:
    return ResidueData(
        r1=0, r2=1, regulator=1.0, h=field.h, w=field.w, discriminant=field.discriminant
    )


def imaginary_quadratic_residue(field: ImaginaryQuadraticField) -> float:
    return residue(imaginary_quadratic_data(field))


# Hilbert class fields Q(i, sqrt 5) of Q(sqrt -5) and Q(sqrt -3, sqrt 5) of Q(sqrt -15):
# biquadratic, class number 1, regulator 2 log of the golden ratio. w counts the roots
# of unity of the class field (4 and 6), not of K.
_HILBERT_CLASS_FIELDS = {
    -5: ResidueData(r1=0, r2=2, regulator=2 * log(GOLDEN_RATIO), h=1, w=4, discriminant=400),
    -15: ResidueData(r1=0, r2=2, regulator=2 * log(GOLDEN_RATIO), h=1, w=6, discriminant=225),
}


def class_field_data(d: int, hilbert: bool = False) -> ResidueData:
    """Residue data for Q(sqrt d), or for its Hilbert class field when `hilbert`."""
    if not hilbert:
        return imaginary_quadratic_data(make_field(d))
    try:
        return _HILBERT_CLASS_FIELDS[d]
    except KeyError:
        raise UnsupportedFieldError(
            f"No Hilbert class field data for d={d}; available: "
            f"{sorted(_HILBERT_CLASS_FIELDS)}"
        ) from None


def has_class_field_data(d: int) -> bool:
    return d in _HILBERT_CLASS_FIELDS
