import sys
from typing import Optional

import click

from irredcount.config.options import output_options, resolve_defaults
from irredcount.config.schema import RunConfig
from irredcount.output.emit import emit
from irredcount.policy.exit_policy import EXIT_ERROR, EXIT_OK, abort
from irredcount.selftest.common import info, success
from irredcount.selftest.runner import run_selftest


@click.command("selftest")
@output_options
def selftest(
    output: Optional[str],
    output_file: Optional[str],
    precision: Optional[int],
    config: Optional[str],
):
    """Run the built-in oracle equivalences; exit 1 if any fails."""
    try:
        defaults = resolve_defaults(config, output=output, precision=precision)
    except Exception as e:
        abort(e)

    click.echo("🩺 Running irredcount selftest", err=True)
    results = run_selftest()
    all_passed = all(r["status"] == "passed" for r in results.values())

    run = RunConfig(command="selftest", output=defaults.output, precision=defaults.precision)
    emit(
        run,
        {"passed": all_passed, "checks": results},
        output_file,
        rows=[{"check": name, **r} for name, r in results.items()],
        csv_fields=["check", "status", "error"],
    )

    if all_passed:
        success("ALL CHECKS PASSED")
        sys.exit(EXIT_OK)

    info("❌ SOME CHECKS FAILED")
    sys.exit(EXIT_ERROR)
