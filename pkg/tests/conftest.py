import sys
from pathlib import Path

import pytest

ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.append(str(ROOT_DIR))

from graphcycles.models import Permutation  # noqa: E402
from graphcycles.services.generators import build_turbo_graph  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="executa testes estatísticos lentos")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: teste estatístico que leva minutos")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="use --runslow para executar")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture()
def square_turbo():
    """n=2 turbo graph with the identity interleaver: a single 4-cycle."""

    return build_turbo_graph(Permutation.identity(2))
