"""
Exact sequence export (CSV or JSON array of decimal strings)
"""
import click

from boolcat.commands.common import handle_errors
from boolcat.core.counting import boolean_catalan, catalan, power2
from boolcat.models.dto import SequenceKind

BUILDERS = {
    SequenceKind.BOOLEAN_CATALAN: boolean_catalan,
    SequenceKind.CATALAN: catalan,
    SequenceKind.POWER2: power2,
}


@click.command("sequence")
@click.option(
    "--kind", type=click.Choice([k.value for k in BUILDERS]),
    default=SequenceKind.BOOLEAN_CATALAN.value, show_default=True,
)
@click.option("--n", "last", type=click.IntRange(min=0), required=True, help="Last index N")
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@handle_errors
def command(kind: str, last: int, output_format: str):
    """Export a_0..a_N of a counting sequence."""
    sequence = BUILDERS[SequenceKind(kind)](last)
    if output_format == "json":
        click.echo(sequence.to_json())
    else:
        click.echo(sequence.to_csv(), nl=False)
