"""
divgraph: divisibility graphs D_n with exact spectral verification.
"""

__version__ = "1.0.0"
