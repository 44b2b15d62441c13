import click


class SelftestError(Exception):
    pass


def info(msg: str) -> None:
    click.echo(msg, err=True)


def success(msg: str) -> None:
    click.echo(f"✔ {msg}", err=True)


def fail(msg: str) -> None:
    click.echo(f"❌ {msg}", err=True)
    raise SelftestError(msg)
