from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

OUTPUT_FORMATS = ("json", "csv", "text")
MAX_PRECISION = 17


@dataclass(frozen=True)
class RunDefaults:
    output: str = "json"
    precision: int = 10
    tolerance: float = 5e-5
    workers: int = 1


@dataclass
class IrredcountConfig:
    defaults: RunDefaults

    @classmethod
    def empty(cls) -> "IrredcountConfig":
        return cls(defaults=RunDefaults())


@dataclass
class RunConfig:
    """The resolved parameters of one command run, echoed in JSON output."""

    command: str
    output: str
    precision: int
    d: Optional[int] = None
    group: List[int] = field(default_factory=list)
    x: Optional[float] = None
    xs: List[float] = field(default_factory=list)
    tolerance: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if v not in (None, [])}


def _check_precision(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"defaults.precision must be an integer, got {value!r}")
    if not 1 <= value <= MAX_PRECISION:
        raise ValueError(f"defaults.precision must be in 1..{MAX_PRECISION}, got {value}")
    return value


def load_config(data: Dict[str, Any]) -> IrredcountConfig:
    allowed_top_level = {"version", "defaults"}
    unknown = set(data.keys()) - allowed_top_level
    if unknown:
        raise ValueError(f"Unknown config fields: {unknown}")

    version = data.get("version", 1)
    if version != 1:
        raise ValueError(f"Unsupported config version: {version}")

    raw = data.get("defaults")
    if not raw:
        return IrredcountConfig.empty()

    if not isinstance(raw, dict):
        raise ValueError("defaults must be a mapping")

    unknown = set(raw.keys()) - {"output", "precision", "tolerance", "workers"}
    if unknown:
        raise ValueError(f"Unknown defaults fields: {unknown}")

    base = RunDefaults()

    output = str(raw.get("output", base.output))
    if output not in OUTPUT_FORMATS:
        raise ValueError(f"defaults.output must be one of {OUTPUT_FORMATS}, got {output!r}")

    precision = _check_precision(raw.get("precision", base.precision))

    tolerance = float(raw.get("tolerance", base.tolerance))
    if tolerance <= 0:
        raise ValueError(f"defaults.tolerance must be positive, got {tolerance}")

    workers = raw.get("workers", base.workers)
    if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
        raise ValueError(f"defaults.workers must be a positive integer, got {workers!r}")

    return IrredcountConfig(
        defaults=RunDefaults(
            output=output, precision=precision, tolerance=tolerance, workers=workers
        )
    )


def read_config(path: Optional[str]) -> IrredcountConfig:
    if not path:
        return IrredcountConfig.empty()
    with Path(path).open() as f:
        raw = yaml.safe_load(f) or {}
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: config root must be a mapping")
    return load_config(raw)
