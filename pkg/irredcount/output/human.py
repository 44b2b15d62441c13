from typing import Any, Dict, List

import click

from irredcount.output.json import round_significant


def _format(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, list):
        return ", ".join(_format(v) for v in value)
    return str(value)


def format_text(result: Dict[str, Any], precision: int) -> List[str]:
    lines = []
    for key, value in round_significant(result, precision).items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k:<12}: {_format(v)}" for k, v in value.items())
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for i, row in enumerate(value, start=1):
                lines.append(f"  {i}. " + ", ".join(f"{k}={_format(v)}" for k, v in row.items()))
        else:
            lines.append(f"{key:<14}: {_format(value)}")
    return lines


def print_text(result: Dict[str, Any], precision: int) -> None:
    for line in format_text(result, precision):
        click.echo(line)
