"""
Preimage counting and listing: brute force, constructive generation or the recurrence
"""
import logging

import click

from boolcat.commands.common import allow_n12_option, cache_options, handle_errors, workers_option
from boolcat.core.cache import open_cache
from boolcat.core.config import get_settings
from boolcat.core.constructive import constructive_preimages
from boolcat.core.counting import boolean_catalan
from boolcat.core.errors import ClassSpecError, LimitExceededError
from boolcat.core.perms import AV_132_231, AV_132_312, AV_231_312, format_word
from boolcat.core.preimage import brute_force, brute_force_count
from boolcat.models.dto import Method, RunConfig

logger = logging.getLogger(__name__)

settings = get_settings()

RECURRENCE_CLASSES = (AV_132_312, AV_231_312, AV_132_231)
RECURRENCE_LABEL = "(recurrence; valid for " + " / ".join(sorted(str(s) for s in RECURRENCE_CLASSES)) + ")"


@click.command("preimage")
@click.argument("mode", type=click.Choice(["count", "list"]))
@click.option("--n", "n", type=int, required=True, help="Permutation length")
@click.option("--class", "class_spec", required=True, help="Forbidden patterns, e.g. 132,312")
@click.option(
    "--method", type=click.Choice([m.value for m in Method]), default=Method.BRUTE.value,
    show_default=True,
)
@workers_option
@cache_options
@allow_n12_option
@handle_errors
def command(mode, n, class_spec, method, workers, cache_path, no_cache, allow_n12):
    """Count or list the permutations of length N whose stack-sorting image avoids CLASS."""
    config = RunConfig(
        command=f"preimage {mode}",
        n=n,
        class_spec=class_spec,
        method=Method(method),
        workers=workers or settings.default_workers,
        cache_path=cache_path,
        use_cache=not no_cache,
        allow_n12=allow_n12,
    )
    if config.n < 1:
        raise click.ClickException("preimage needs --n >= 1")
    spec = config.spec

    if config.method == Method.RECURRENCE:
        if mode == "list":
            raise click.ClickException("the recurrence method only counts; use brute or constructive to list")
        if spec not in RECURRENCE_CLASSES:
            raise ClassSpecError(f"the recurrence only applies to {', '.join(str(s) for s in RECURRENCE_CLASSES)}")
        click.echo(f"{boolean_catalan(config.n)[config.n]} {RECURRENCE_LABEL}")
        return

    if mode == "count":
        click.echo(str(_count(config)))
        return

    if config.n > settings.brute_set_limit:
        raise LimitExceededError("preimage listing", config.n, settings.brute_set_limit)
    if config.method == Method.BRUTE:
        members = brute_force(config.n, spec)
    else:
        members = constructive_preimages(config.n, spec)
    for p in members:
        click.echo(format_word(p))


def _count(config: RunConfig) -> int:
    spec = config.spec
    cache = open_cache(config.cache_path, config.use_cache)
    cached = cache.get_count(spec.key, config.n, config.method.value)
    if cached is not None:
        logger.info(f"Cache hit for {spec} n={config.n} {config.method.value}")
        return cached

    if config.method == Method.BRUTE:
        value = brute_force_count(
            config.n, spec, workers=config.workers, allow_override=config.allow_n12
        )
    else:
        value = len(constructive_preimages(config.n, spec))
    cache.set_count(spec.key, config.n, config.method.value, value)
    return value
