from typing import List, Optional

import click

from irredcount.analysis.coefficients import field_coefficients
from irredcount.config.options import float_list, output_options, resolve_defaults
from irredcount.config.schema import RunConfig
from irredcount.counting.brute_force import brute_force_m
from irredcount.counting.classify import classify_element
from irredcount.counting.compare import compare_report
from irredcount.counting.ideals import count_m, with_prediction
from irredcount.fields.quadratic import make_field
from irredcount.output.csv import COUNT_FIELDS
from irredcount.output.emit import emit
from irredcount.policy.exit_policy import abort

D_HELP = "Squarefree d < 0 selecting Q(sqrt d)"


@click.command("count")
@click.option("--d", "d", type=int, required=True, help=D_HELP)
@click.option("--x", "x", type=float, required=True, help="Norm bound")
@click.option(
    "--method",
    type=click.Choice(["census", "brute-force"]),
    default="census",
    help="Ideal census (default) or the element-level oracle (x <= 2000)",
)
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Sieve threads")
@output_options
def count(
    d: int,
    x: float,
    method: str,
    workers: Optional[int],
    output: Optional[str],
    output_file: Optional[str],
    precision: Optional[int],
    config: Optional[str],
):
    """Exact M(x) with its prime and pair parts, next to the asymptotic prediction.

    CSV columns: d, x, M, P, pair_count, predicted, leading, ratio, error_scale, method.
    """
    try:
        defaults = resolve_defaults(config, output=output, precision=precision, workers=workers)
        field = make_field(d)

        click.echo(f"🔍 Counting irreducibles of {field.label} up to {x:g} ({method})", err=True)
        coefficients = None
        if field.h <= 2:
            coefficients = field_coefficients(field, defaults.tolerance, workers=defaults.workers)

        if method == "brute-force":
            report = with_prediction(brute_force_m(field, x), coefficients)
        else:
            report = count_m(field, x, coefficients=coefficients, workers=defaults.workers)

        run = RunConfig(
            command="count",
            output=defaults.output,
            precision=defaults.precision,
            d=d,
            x=x,
            tolerance=defaults.tolerance,
        )
        emit(run, report.to_dict(), output_file, csv_fields=COUNT_FIELDS)
    except click.ClickException:
        raise
    except Exception as e:
        abort(e)


@click.command("classify")
@click.option("--d", "d", type=int, required=True, help=D_HELP)
@click.option("--a", "a", type=int, required=True, help="Coefficient of 1")
@click.option("--b", "b", type=int, required=True, help="Coefficient of omega")
@output_options
def classify(
    d: int,
    a: int,
    b: int,
    output: Optional[str],
    output_file: Optional[str],
    precision: Optional[int],
    config: Optional[str],
):
    """Classify a + b*omega as zero, unit, prime, irreducible_nonprime or reducible.

    omega is (1 + sqrt d)/2 when d = 1 mod 4 and sqrt d otherwise.
    """
    try:
        defaults = resolve_defaults(config, output=output, precision=precision)
        field = make_field(d)
        kind = classify_element(field, a, b)

        run = RunConfig(command="classify", output=defaults.output, precision=defaults.precision, d=d)
        emit(
            run,
            {"d": d, "a": a, "b": b, "norm": field.norm(a, b), "kind": kind.value},
            output_file,
        )
    except click.ClickException:
        raise
    except Exception as e:
        abort(e)


@click.command("compare")
@click.option("--d", "d", type=int, required=True, help=D_HELP)
@click.option("--xs", "xs", required=True, callback=float_list, help="Comma-separated bounds")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Sieve threads")
@output_options
def compare(
    d: int,
    xs: List[float],
    workers: Optional[int],
    output: Optional[str],
    output_file: Optional[str],
    precision: Optional[int],
    config: Optional[str],
):
    """Table of exact M(x) against the two-term prediction (plot-ready as CSV).

    CSV columns: d, x, M, P, pair_count, predicted, leading, ratio, error_scale, method.
    """
    try:
        defaults = resolve_defaults(config, output=output, precision=precision, workers=workers)
        field = make_field(d)

        click.echo(f"🔍 Building the ideal census of {field.label} up to {max(xs, default=0):g}", err=True)
        reports = compare_report(
            field, xs, tolerance=defaults.tolerance, workers=defaults.workers
        )

        run = RunConfig(
            command="compare",
            output=defaults.output,
            precision=defaults.precision,
            d=d,
            xs=sorted(xs),
            tolerance=defaults.tolerance,
        )
        rows = [r.to_dict() for r in reports]
        emit(run, {"d": d, "reports": rows}, output_file, rows=rows, csv_fields=COUNT_FIELDS)
    except click.ClickException:
        raise
    except Exception as e:
        abort(e)
