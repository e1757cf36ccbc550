"""
0-1-tree counting and listing
"""
import logging

import click

from boolcat.commands.common import handle_errors
from boolcat.core.config import get_settings
from boolcat.core.counting import boolean_catalan
from boolcat.core.errors import LimitExceededError
from boolcat.core.trees import count_trees, encode, generate_trees
from boolcat.models.dto import RunConfig

logger = logging.getLogger(__name__)

settings = get_settings()


@click.command("trees")
@click.argument("mode", type=click.Choice(["count", "list"]))
@click.option("--n", "n", type=int, required=True, help="Number of vertices")
@click.option("--generate", is_flag=True, help="Count by exhaustive generation instead of the recurrence")
@handle_errors
def command(mode: str, n: int, generate: bool):
    """Count the 0-1-trees on N vertices, or list their codes one per line."""
    config = RunConfig(command=f"trees {mode}", n=n)
    if config.n < 1:
        raise click.ClickException("trees needs --n >= 1")

    if mode == "count":
        if generate:
            if config.n > settings.tree_generation_limit:
                raise LimitExceededError("tree generation", config.n, settings.tree_generation_limit)
            click.echo(str(count_trees(config.n)))
        else:
            click.echo(str(boolean_catalan(config.n)[config.n]))
        return

    if config.n > settings.tree_list_limit:
        raise LimitExceededError("tree listing", config.n, settings.tree_list_limit)
    for tree in generate_trees(config.n):
        click.echo(encode(tree))
