import click

from irredcount.analysis.command import coeffs, gvalue
from irredcount.counting.command import classify, compare, count
from irredcount.groups.command import davenport, zerosums
from irredcount.selftest.command import selftest


@click.group()
def cli():
    """irredcount – counting irreducibles in imaginary quadratic fields"""
    pass


cli.add_command(davenport)
cli.add_command(zerosums)
cli.add_command(coeffs)
cli.add_command(gvalue)
cli.add_command(count)
cli.add_command(classify)
cli.add_command(compare)
cli.add_command(selftest)


def main():
    cli()


if __name__ == "__main__":
    main()
