from dataclasses import dataclass
from typing import Any, Dict


@dataclass(frozen=True)
class TruncatedSum:
    value: float
    cutoff: float
    error_bound: float

    def __post_init__(self):
        if self.error_bound < 0:
            raise ValueError(f"error_bound must be nonnegative, got {self.error_bound}")

    @property
    def lower(self) -> float:
        return self.value - self.error_bound

    @property
    def upper(self) -> float:
        return self.value + self.error_bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "cutoff": self.cutoff,
            "error_bound": self.error_bound,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TruncatedSum":
        return cls(
            value=float(data["value"]),
            cutoff=float(data["cutoff"]),
            error_bound=float(data["error_bound"]),
        )
