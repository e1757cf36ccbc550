import logging

import pytest
import structlog
from click.testing import CliRunner

from boolcat.core.constructive import constructive_generator
from boolcat.models.dto import VerifyOptions


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture(autouse=True)
def reset_logging():
    """CLI runs bind log output to the runner's streams; unbind after each test"""
    yield
    structlog.reset_defaults()
    for handler in logging.root.handlers[:]:
        logging.root.removeHandler(handler)


@pytest.fixture
def cache_file(tmp_path):
    return tmp_path / "counts.json"


@pytest.fixture
def no_cache_options():
    return VerifyOptions(workers=1, use_cache=False)


@pytest.fixture
def fresh_generator():
    """Drop memoized constructive sets so tests see a cold generator"""
    constructive_generator.clear()
    yield constructive_generator
    constructive_generator.clear()
