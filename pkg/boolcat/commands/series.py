"""
Generating-function check at a point z
"""
import click

from boolcat.commands.common import handle_errors
from boolcat.core.counting import functional_equation_residual, series_partial_sum


@click.command("series")
@click.option("--z", "z", type=float, required=True, help="Point strictly inside (0, (sqrt(2)-1)/2)")
@click.option("--n", "order", type=click.IntRange(min=0), default=12, show_default=True, help="Truncation order")
@handle_errors
def command(z: float, order: int):
    """Compare the truncated series sum a_n z^n with the closed form at Z."""
    point = series_partial_sum(z, order)
    residual = functional_equation_residual(z, order)
    click.echo(f"z             {point.z!r}")
    click.echo(f"N             {point.N}")
    click.echo(f"closed_form   {point.closed_form!r}")
    click.echo(f"partial_sum   {point.partial_sum!r}")
    click.echo(f"gap           {point.gap:.6e}")
    click.echo(f"residual      {residual:.6e}")
