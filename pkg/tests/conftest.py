"""Pytest configuration and fixtures."""

import pytest
import sys
from pathlib import Path

repo_root = Path(__file__).parent.parent
sys.path.insert(0, str(repo_root))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-range grid runs")


@pytest.fixture
def mock_config():
    """Create a mock configuration."""
    from fractions import Fraction
    from unittest.mock import MagicMock

    config = MagicMock()
    config.app_name = "einflag"
    config.app_version = "0.1.0"
    config.width_exponent = 80
    config.certification_width = Fraction(1, 2 ** 80)
    config.minimum_width = Fraction(1, 2 ** 4096)
    config.report_digits = 30
    config.report_format = "table"
    config.sweep_jobs = 1
    config.newton_grid_density = 6
    config.newton_upper = 6.0
    config.newton_max_iterations = 60
    config.newton_tolerance = 1e-12
    config.newton_cluster_radius = 1e-6
    config.log_level = "WARNING"
    config.log_to_file = False
    config.log_dir = Path("data/logs")

    return config


@pytest.fixture
def q31():
    """The palindromic quartic for n=3, p=1."""
    from src.exactmath import UniPoly

    return UniPoly([117, -912, 1782, -912, 117], "x3")


@pytest.fixture
def f32():
    """The Case-1 quartic for n=3, p=2."""
    from src.exactmath import UniPoly

    return UniPoly([432, -960, 852, -352, 60], "x4")


@pytest.fixture
def s31():
    """The x4-quartic for n=3, p=1."""
    from src.exactmath import UniPoly

    return UniPoly([160, 1520, -750, -4320, 2808], "x4")


@pytest.fixture
def space31():
    from src.flagmodel import make_flag_space

    return make_flag_space(3, 1)


@pytest.fixture
def space42():
    from src.flagmodel import make_flag_space

    return make_flag_space(4, 2)
