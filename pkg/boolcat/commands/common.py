"""
Shared CLI plumbing: error translation and common options
"""
import logging
from functools import wraps
from typing import Any, Callable

import click
from pydantic import ValidationError

from boolcat.core.config import get_settings
from boolcat.core.errors import BoolcatError

logger = logging.getLogger(__name__)

settings = get_settings()


def handle_errors(func: Callable) -> Callable:
    """Turn domain and validation errors into a nonzero exit with a message"""
    @wraps(func)
    def wrapper(*args, **kwargs) -> Any:
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except ValidationError as e:
            messages = "; ".join(err["msg"] for err in e.errors())
            raise click.ClickException(f"invalid arguments: {messages}") from e
        except BoolcatError as e:
            logger.error(f"{func.__name__} failed: {e}")
            raise click.ClickException(str(e)) from e

    return wrapper


def workers_option(func: Callable) -> Callable:
    return click.option(
        "--workers", type=int, default=None,
        help="Worker processes for brute force (default: CPU count)",
    )(func)


def cache_options(func: Callable) -> Callable:
    func = click.option(
        "--no-cache", "no_cache", is_flag=True, help="Bypass the count cache",
    )(func)
    return click.option(
        "--cache", "cache_path", type=click.Path(dir_okay=False), default=None,
        help="Count cache file (default: BOOLCAT_CACHE_PATH)",
    )(func)


def allow_n12_option(func: Callable) -> Callable:
    return click.option(
        "--allow-n12", "allow_n12", is_flag=True,
        help=f"Permit brute-force counting up to n={settings.brute_override_limit}",
    )(func)
