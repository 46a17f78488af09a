"""Exact-arithmetic toolkit for level-one Siegel modular form computations.

Everything in this package is exact: integers are unbounded, rationals are
`fractions.Fraction`, and no floating point enters any pipeline result.
"""

__version__ = "0.1.0"
