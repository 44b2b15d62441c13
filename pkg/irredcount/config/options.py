from dataclasses import replace
from typing import Callable, Optional

import click

from irredcount.config.schema import MAX_PRECISION, OUTPUT_FORMATS, RunDefaults, read_config


def output_options(command: Callable) -> Callable:
    """--output / --output-file / --precision / --config shared by every command."""
    options = [
        click.option(
            "--output",
            default=None,
            type=click.Choice(list(OUTPUT_FORMATS)),
            help="Output format (default from config, else json)",
        ),
        click.option(
            "--output-file",
            default=None,
            type=click.Path(dir_okay=False, writable=True),
            help="Write the result here instead of stdout",
        ),
        click.option(
            "--precision",
            default=None,
            type=click.IntRange(1, MAX_PRECISION),
            help="Significant digits for floating values (default 10)",
        ),
        click.option(
            "--config",
            type=click.Path(exists=True, dir_okay=False),
            help="Path to irredcount.yaml",
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def resolve_defaults(
    config: Optional[str],
    output: Optional[str] = None,
    precision: Optional[int] = None,
    tolerance: Optional[float] = None,
    workers: Optional[int] = None,
) -> RunDefaults:
    defaults = read_config(config).defaults

    # CLI overrides config
    overrides = {
        "output": output,
        "precision": precision,
        "tolerance": tolerance,
        "workers": workers,
    }
    return replace(defaults, **{k: v for k, v in overrides.items() if v is not None})


def _split(value: Optional[str]):
    if value is None:
        return None
    return [item.strip() for item in value.split(",") if item.strip()]


def int_list(ctx: click.Context, param: click.Parameter, value: Optional[str]):
    items = _split(value)
    if items is None:
        return None
    try:
        return [int(item) for item in items]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def float_list(ctx: click.Context, param: click.Parameter, value: Optional[str]):
    items = _split(value)
    if items is None:
        return None
    try:
        return [float(item) for item in items]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got {value!r}")
