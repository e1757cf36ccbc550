"""
Verification sweep command; exit status 0 iff every row passes
"""
import click

from boolcat.commands.common import allow_n12_option, cache_options, handle_errors, workers_option
from boolcat.core.config import get_settings
from boolcat.core.reporting import render_csv, render_table
from boolcat.core.verification import verify
from boolcat.models.dto import OutputFormat, RunConfig, VerifyOptions

settings = get_settings()


@click.command("verify")
@click.option("--max-n", "max_n", type=int, required=True, help="Verify n = 1..MAX_N")
@click.option(
    "--format", "output_format", type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TABLE.value, show_default=True,
)
@click.option("--check-sets", is_flag=True, help="Also compare constructive and brute-force sets")
@click.option("--no-timing", is_flag=True, help="Omit wall-clock fields from table and CSV output")
@workers_option
@cache_options
@allow_n12_option
@handle_errors
@click.pass_context
def command(ctx, max_n, output_format, check_sets, no_timing, workers, cache_path, no_cache, allow_n12):
    """Check a_n against tree, brute-force and constructive counts for n = 1..MAX_N."""
    config = RunConfig(
        command="verify",
        max_n=max_n,
        workers=workers or settings.default_workers,
        cache_path=cache_path,
        use_cache=not no_cache,
        output_format=OutputFormat(output_format),
        allow_n12=allow_n12,
    )
    report = verify(
        config.max_n,
        VerifyOptions(
            workers=config.workers,
            use_cache=config.use_cache,
            cache_path=config.cache_path,
            check_sets=check_sets,
            allow_n12=config.allow_n12,
        ),
    )

    if config.output_format == OutputFormat.JSON:
        click.echo(report.to_json())
    elif config.output_format == OutputFormat.CSV:
        click.echo(render_csv(report, show_timing=not no_timing), nl=False)
    else:
        click.echo(render_table(report, show_timing=not no_timing), nl=False)

    if not report.passed:
        ctx.exit(1)
