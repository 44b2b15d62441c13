from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import click

from irredcount.config.schema import RunConfig
from irredcount.output.csv import write_csv
from irredcount.output.human import print_text
from irredcount.output.json import SCHEMA_VERSION, write_json


def emit(
    run: RunConfig,
    result: Dict[str, Any],
    output_file: Optional[str] = None,
    rows: Optional[List[Dict[str, Any]]] = None,
    csv_fields: Optional[Sequence[str]] = None,
) -> None:
    """Write `result` in the run's format; CSV uses `rows` when given, else one flat row."""
    output_path = Path(output_file) if output_file else None

    if run.output == "json":
        text = write_json(
            {
                "schema": SCHEMA_VERSION,
                "command": run.command,
                "config": run.to_dict(),
                "result": result,
            },
            output_path,
            precision=run.precision,
        )
    elif run.output == "csv":
        if rows is None:
            rows = [{k: v for k, v in result.items() if not isinstance(v, (dict, list))}]
        fields = list(csv_fields) if csv_fields else list(rows[0].keys()) if rows else []
        text = write_csv(rows, fields, output_path, precision=run.precision)
    else:
        if output_path:
            raise ValueError("--output-file is only supported for json/csv output")
        print_text(result, run.precision)
        return

    if output_path:
        click.echo(f"✓ {run.output.upper()} output written to {output_path}", err=True)
    else:
        click.echo(text, nl=not text.endswith("\n"))
