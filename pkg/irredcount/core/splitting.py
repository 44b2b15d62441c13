from enum import Enum


class Splitting(str, Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


SPLITTING_BY_SYMBOL = {
    1: Splitting.SPLIT,
    -1: Splitting.INERT,
    0: Splitting.RAMIFIED,
}
