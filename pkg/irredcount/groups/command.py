from typing import List, Optional

import click

from irredcount.config.options import int_list, output_options, resolve_defaults
from irredcount.config.schema import RunConfig
from irredcount.groups.abelian import make_group
from irredcount.groups.zero_sums import (
    davenport_constant,
    enumerate_minimal_zero_sums,
    patterns_by_size,
)
from irredcount.output.emit import emit
from irredcount.policy.exit_policy import abort

GROUP_HELP = "Invariant factors n_1|n_2|..., comma-separated (e.g. 3,3); '1' is the trivial group"


def _group(factors: List[int]):
    # a lone 1 names the trivial group
    return make_group([] if factors == [1] else factors)


@click.command("davenport")
@click.option("--group", "factors", required=True, callback=int_list, help=GROUP_HELP)
@output_options
def davenport(
    factors: List[int],
    output: Optional[str],
    output_file: Optional[str],
    precision: Optional[int],
    config: Optional[str],
):
    """Davenport constant D(G) and the sizes |D_m| of the minimal zero-sum sets.

    CSV columns: m, patterns.
    """
    try:
        defaults = resolve_defaults(config, output=output, precision=precision)
        group = _group(factors)

        click.echo(f"🔍 Enumerating minimal zero-sums of {group.label()}", err=True)
        D = davenport_constant(group)
        sizes = {m: len(p) for m, p in patterns_by_size(group, group.order).items()}

        run = RunConfig(
            command="davenport",
            output=defaults.output,
            precision=defaults.precision,
            group=list(group.invariant_factors),
        )
        emit(
            run,
            {
                "group": group.label(),
                "order": group.order,
                "davenport": D,
                "pattern_counts": {str(m): n for m, n in sizes.items()},
            },
            output_file,
            rows=[{"m": m, "patterns": n} for m, n in sizes.items()],
            csv_fields=["m", "patterns"],
        )
    except click.ClickException:
        raise
    except Exception as e:
        abort(e)


@click.command("zerosums")
@click.option("--group", "factors", required=True, callback=int_list, help=GROUP_HELP)
@click.option("--m", "m", required=True, type=int, help="Pattern size (number of classes)")
@output_options
def zerosums(
    factors: List[int],
    m: int,
    output: Optional[str],
    output_file: Optional[str],
    precision: Optional[int],
    config: Optional[str],
):
    """List the minimal zero-sum patterns D_m of G in canonical order.

    CSV columns: pattern, element, count (one row per element of each pattern).
    """
    try:
        defaults = resolve_defaults(config, output=output, precision=precision)
        group = _group(factors)
        patterns = enumerate_minimal_zero_sums(group, m)

        rows = [
            {"pattern": i, "element": str(element), "count": count}
            for i, pattern in enumerate(patterns, start=1)
            for element, count in pattern.counts
        ]
        run = RunConfig(
            command="zerosums",
            output=defaults.output,
            precision=defaults.precision,
            group=list(group.invariant_factors),
        )
        emit(
            run,
            {
                "group": group.label(),
                "m": m,
                "count": len(patterns),
                "patterns": [p.to_dict() for p in patterns],
            },
            output_file,
            rows=rows,
            csv_fields=["pattern", "element", "count"],
        )
    except click.ClickException:
        raise
    except Exception as e:
        abort(e)
