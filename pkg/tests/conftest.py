"""
Pytest configuration and fixtures for divgraph tests
"""
import os
from unittest.mock import patch

import numpy as np
import pytest
import structlog

from divgraph.config import DivGraphConfig, reset_global_config, set_global_config
from divgraph.graph import build


@pytest.fixture(autouse=True)
def testing_config():
    """Install the small-guard testing configuration as the global one"""
    with patch.dict(os.environ, {}, clear=False):
        for key in [k for k in os.environ if k.startswith("DIVGRAPH_")]:
            del os.environ[key]
        config = DivGraphConfig.for_testing()
        set_global_config(config)
        yield config
    reset_global_config()
    structlog.reset_defaults()


@pytest.fixture
def clean_environment():
    """Provide a clean environment for testing configuration"""
    with patch.dict(os.environ, {}, clear=True):
        yield


@pytest.fixture
def test_environment():
    """Provide DIVGRAPH_* environment variables"""
    test_env = {
        "DIVGRAPH_ENVIRONMENT": "test",
        "DIVGRAPH_MAX_VERTICES": "512",
        "DIVGRAPH_SEED": "99",
        "DIVGRAPH_JOBS": "2",
        "DIVGRAPH_LOG_LEVEL": "ERROR",
    }
    with patch.dict(os.environ, test_env):
        yield test_env


@pytest.fixture
def d36(testing_config):
    """D_36, type (2,2)"""
    return build((2, 2), testing_config)


@pytest.fixture
def d30(testing_config):
    """D_30, type (1,1,1)"""
    return build((1, 1, 1), testing_config)


@pytest.fixture
def k4_minus_edge():
    """Adjacency of D_6 in canonical order 1, p, q, pq"""
    return np.array([
        [0, 1, 1, 1],
        [1, 0, 0, 1],
        [1, 0, 0, 1],
        [1, 1, 1, 0],
    ], dtype=np.int64)


@pytest.fixture
def acceptance_config(testing_config):
    """Testing configuration with guards wide enough for the full-scale batteries"""
    config = DivGraphConfig.for_testing(charpoly_max_dim=320, max_vertices=2048)
    set_global_config(config)
    return config
