from math import gcd
from typing import List, Optional

import click

from irredcount.analysis.coefficients import build_coefficient_set, cyclic_cb
from irredcount.analysis.prime_sums import g_value_h2, g_value_inputs, g_value_principal
from irredcount.config.options import (
    float_list,
    int_list,
    output_options,
    resolve_defaults,
)
from irredcount.config.schema import RunConfig
from irredcount.fields.quadratic import make_field
from irredcount.groups.abelian import cyclic_group, make_group
from irredcount.output.emit import emit
from irredcount.policy.exit_policy import abort

COEFFICIENT_FIELDS = ["order", "davenport", "c_d", "c_dm1", "c_dm2", "C", "B"]


def _per_class(values: Optional[List[float]], order: int, name: str) -> List[float]:
    """A full per-class vector, or one value shared by every nonprincipal class."""
    if not values:
        return [0.0] * order
    if len(values) == order:
        return values
    if len(values) == 1:
        return [0.0] + values * (order - 1) if order > 1 else values
    raise ValueError(f"--{name} needs 1 or {order} values, got {len(values)}")


@click.command("coeffs")
@click.option("--h", "h", type=int, default=None, help="Cyclic class group of order h")
@click.option("--group", "factors", callback=int_list, default=None, help="Invariant factors")
@click.option("--g", "g", callback=float_list, default=None, help="g_c(1) per class")
@click.option("--z2", "z2", callback=float_list, default=None, help="z_{c,2} per class")
@output_options
def coeffs(
    h: Optional[int],
    factors: Optional[List[int]],
    g: Optional[List[float]],
    z2: Optional[List[float]],
    output: Optional[str],
    output_file: Optional[str],
    precision: Optional[int],
    config: Optional[str],
):
    """Top coefficients c_D, c_{D-1}, c_{D-2} and the constants C, B of M(x).

    --g/--z2 take one value per class in canonical order, or a single value that is
    given to every nonprincipal class (the principal class then gets 0).

    CSV columns: order, davenport, c_d, c_dm1, c_dm2, C, B.
    """
    try:
        defaults = resolve_defaults(config, output=output, precision=precision)
        if (h is None) == (factors is None):
            raise ValueError("Give exactly one of --h or --group")
        group = cyclic_group(h) if h is not None else make_group(factors or [])

        g_vec = _per_class(g, group.order, "g")
        z2_vec = _per_class(z2, group.order, "z2")
        coefficients = build_coefficient_set(group, g_vec, z2_vec)

        result = {"group": group.label(), **coefficients.to_dict()}
        if group.is_cyclic and group.order >= 2:
            generators = [g_vec[k] for k in range(1, group.order) if gcd(k, group.order) == 1]
            C, B = cyclic_cb(group.order, sum(generators))
            result["cyclic_closed_form"] = {"C": C, "B": B}

        run = RunConfig(
            command="coeffs",
            output=defaults.output,
            precision=defaults.precision,
            group=list(group.invariant_factors),
        )
        emit(run, result, output_file, csv_fields=COEFFICIENT_FIELDS)
    except click.ClickException:
        raise
    except Exception as e:
        abort(e)


@click.command("gvalue")
@click.option("--d", "d", type=int, required=True, help="Squarefree d < 0 selecting Q(sqrt d)")
@click.option("--tol", "tolerance", type=float, default=None, help="Truncation tolerance")
@output_options
def gvalue(
    d: int,
    tolerance: Optional[float],
    output: Optional[str],
    output_file: Optional[str],
    precision: Optional[int],
    config: Optional[str],
):
    """g_c(1) for the classes of Q(sqrt d), with the truncated prime sum behind it.

    CSV columns: d, h, x, a_K, a_L, S, g, bound, g_principal, g_principal_bound.
    """
    try:
        defaults = resolve_defaults(config, output=output, precision=precision, tolerance=tolerance)
        if defaults.tolerance <= 0:
            raise ValueError(f"--tol must be positive, got {defaults.tolerance}")
        field = make_field(d)

        click.echo(f"🔍 Summing prime ideals of {field.label} (h = {field.h})", err=True)
        principal = g_value_principal(field, defaults.tolerance, workers=defaults.workers)
        result = {"d": d, "h": field.h}

        if field.h == 2:
            inputs = g_value_inputs(field, defaults.tolerance, workers=defaults.workers)
            g = g_value_h2(inputs)
            result.update(
                {
                    "x": inputs.S.cutoff,
                    "a_K": inputs.a_K,
                    "a_L": inputs.a_L,
                    "log_part": inputs.log_part,
                    "S": inputs.S.value,
                    "g": g.value,
                    "bound": g.error_bound,
                }
            )

        result.update({"g_principal": principal.value, "g_principal_bound": principal.error_bound})

        run = RunConfig(
            command="gvalue",
            output=defaults.output,
            precision=defaults.precision,
            d=d,
            tolerance=defaults.tolerance,
        )
        emit(run, result, output_file)
    except click.ClickException:
        raise
    except Exception as e:
        abort(e)
