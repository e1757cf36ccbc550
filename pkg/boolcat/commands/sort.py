"""
Stack-sorting command
"""
import click

from boolcat.commands.common import handle_errors
from boolcat.core.perms import format_word, parse_word, stack_sort, stack_sort_machine


@click.command("sort")
@click.argument("word", default="")
@click.option("--machine", is_flag=True, help="Use the single-stack pass instead of the recursion")
@handle_errors
def command(word: str, machine: bool):
    """Print s(WORD) for a space-separated word, e.g. "3 7 5 2 4 1 6"."""
    w = parse_word(word)
    image = stack_sort_machine(w) if machine else stack_sort(w)
    click.echo(format_word(image))
