"""
boolcat command-line entry point

Stack sorting, 0-1-trees and exhaustive verification of stack-sorting
preimage counts against the Boolean-Catalan numbers.
"""
import logging

import click

from boolcat.commands import preimage, sequence, series, sort, trees, verify
from boolcat.core.config import get_settings
from boolcat.monitoring import configure_logging

logger = logging.getLogger(__name__)


@click.group()
@click.option("--log-level", default=None, help="Logging level for stderr (default: BOOLCAT_LOG_LEVEL)")
@click.version_option("1.0.0", prog_name="boolcat")
def cli(log_level):
    """Stack-sorting preimages and Boolean-Catalan numbers."""
    settings = get_settings()
    configure_logging(log_level or settings.log_level)
    logger.debug(f"Settings: {settings.model_dump()}")


# Register commands
cli.add_command(sort.command)
cli.add_command(trees.command)
cli.add_command(preimage.command)
cli.add_command(verify.command)
cli.add_command(series.command)
cli.add_command(sequence.command)


def main():
    cli()


if __name__ == "__main__":
    main()
