"""
indatt: independence polynomials, their attractors and the searches behind them.
"""

__version__ = "1.0.0"
