import sys

import click

from irredcount.core.errors import UnsupportedFieldError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2


def exit_code_for(error: BaseException) -> int:
    """
    Map an exception raised during a run to the process exit code.

    Rules:

    1. Bad input (ValueError from argument checks) → EXIT_USAGE
    2. Field outside the supported arithmetic → EXIT_ERROR
    3. Anything else → EXIT_ERROR
    """
    if isinstance(error, UnsupportedFieldError):
        return EXIT_ERROR
    if isinstance(error, ValueError):
        return EXIT_USAGE
    return EXIT_ERROR


def abort(error: BaseException) -> None:
    """Report `error` on stderr and leave with its exit code."""
    if exit_code_for(error) == EXIT_USAGE:
        raise click.UsageError(str(error), ctx=click.get_current_context(silent=True))
    click.echo(f"❌ {error}", err=True)
    sys.exit(exit_code_for(error))
