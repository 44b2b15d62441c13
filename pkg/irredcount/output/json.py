import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Optional

SCHEMA_VERSION = 1


def round_significant(data: Any, precision: Optional[int]) -> Any:
    """Round every float in a JSON-like tree to `precision` significant digits."""
    if precision is None:
        return data
    if isinstance(data, float):
        return float(f"{data:.{precision}g}")
    if isinstance(data, dict):
        return {k: round_significant(v, precision) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [round_significant(v, precision) for v in data]
    return data


def to_plain(o: Any) -> Any:
    if hasattr(o, "to_dict"):
        return to_plain(o.to_dict())
    if is_dataclass(o) and not isinstance(o, type):
        return to_plain(asdict(o))
    if isinstance(o, Enum):
        return o.value
    if isinstance(o, dict):
        return {k: to_plain(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [to_plain(v) for v in o]
    return o


def write_json(data: Any, output_path: Optional[Path] = None, precision: Optional[int] = None):
    json_str = json.dumps(round_significant(to_plain(data), precision), indent=2)

    if output_path:
        with open(output_path, "w", encoding="utf-8") as f:
            f.write(json_str + "\n")
    else:
        return json_str
