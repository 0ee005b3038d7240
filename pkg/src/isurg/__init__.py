"""Exact graded-dimension computations for surgeries on instanton L-space
knots, with an independent constraint-propagation oracle."""

__version__ = "0.1.0"
