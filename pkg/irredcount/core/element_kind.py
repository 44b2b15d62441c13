from enum import Enum


class ElementKind(str, Enum):
    ZERO = "zero"
    UNIT = "unit"
    PRIME = "prime"
    IRREDUCIBLE_NONPRIME = "irreducible_nonprime"
    REDUCIBLE = "reducible"
