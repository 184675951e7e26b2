"""
Configuration Module for divgraph
"""

from .base_config import (
    DivGraphConfig,
    ConfigurationBuilder,
    get_config,
    set_global_config,
    reset_global_config,
    resolve_config,
)

__all__ = [
    "DivGraphConfig",
    "ConfigurationBuilder",
    "get_config",
    "set_global_config",
    "reset_global_config",
    "resolve_config",
]
