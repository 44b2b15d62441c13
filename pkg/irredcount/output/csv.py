import csv
import io
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from irredcount.output.json import round_significant

COUNT_FIELDS = [
    "d",
    "x",
    "M",
    "P",
    "pair_count",
    "predicted",
    "leading",
    "ratio",
    "error_scale",
    "method",
]


def write_csv(
    rows: List[Dict[str, Any]],
    fields: Sequence[str],
    output_file: Optional[Path] = None,
    precision: Optional[int] = None,
):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()

    for row in rows:
        rounded = round_significant(row, precision)
        # flatten only top-level fields
        writer.writerow({k: rounded.get(k) for k in fields})

    if output_file:
        with Path(output_file).open("w", newline="") as f:
            f.write(buffer.getvalue())
    else:
        return buffer.getvalue()
