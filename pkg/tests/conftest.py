from pathlib import Path

import pytest

from ehrlab.config import PACKAGE_FIXTURES


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False, help="run long-running checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip_long = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip_long)


@pytest.fixture
def fixtures_dir() -> Path:
    return PACKAGE_FIXTURES
