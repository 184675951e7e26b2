"""
Command line surface: the `divgraph` click group and its selftest
"""

from .main import cli, main

__all__ = ["cli", "main"]
