from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CoefficientSet:
    """Leading coefficients of the irreducible Dirichlet series and of M(x)."""

    order: int
    davenport: int

    c_d: float
    c_dm1: Optional[float]
    c_dm2: Optional[float]

    C: float
    B: Optional[float]

    # per-class inputs in canonical class order
    g: List[float] = field(default_factory=list)
    z2: List[float] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "davenport": self.davenport,
            "c_d": self.c_d,
            "c_dm1": self.c_dm1,
            "c_dm2": self.c_dm2,
            "C": self.C,
            "B": self.B,
            "inputs": {"g": list(self.g), "z2": list(self.z2)},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CoefficientSet":
        inputs = data.get("inputs", {})
        return cls(
            order=int(data["order"]),
            davenport=int(data["davenport"]),
            c_d=float(data["c_d"]),
            c_dm1=None if data.get("c_dm1") is None else float(data["c_dm1"]),
            c_dm2=None if data.get("c_dm2") is None else float(data["c_dm2"]),
            C=float(data["C"]),
            B=None if data.get("B") is None else float(data["B"]),
            g=[float(v) for v in inputs.get("g", [])],
            z2=[float(v) for v in inputs.get("z2", [])],
        )


@dataclass
class CountReport:
    d: int
    x: float

    M: int
    P: int
    pair_count: int

    predicted: Optional[float] = None
    leading: Optional[float] = None
    ratio: Optional[float] = None
    error_scale: Optional[float] = None

    method: str = "census"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "x": self.x,
            "M": self.M,
            "P": self.P,
            "pair_count": self.pair_count,
            "predicted": self.predicted,
            "leading": self.leading,
            "ratio": self.ratio,
            "error_scale": self.error_scale,
            "method": self.method,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CountReport":
        def _opt(key: str) -> Optional[float]:
            value = data.get(key)
            return None if value is None else float(value)

        return cls(
            d=int(data["d"]),
            x=float(data["x"]),
            M=int(data["M"]),
            P=int(data["P"]),
            pair_count=int(data["pair_count"]),
            predicted=_opt("predicted"),
            leading=_opt("leading"),
            ratio=_opt("ratio"),
            error_scale=_opt("error_scale"),
            method=str(data.get("method", "census")),
        )
