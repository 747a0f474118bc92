"""
compactlab

Exact finite-scale computations for commutative rings, their spectra, Stone duality and
compactifications. Every statement the package checks is backed by an exhaustive
computation over small rings and spaces, or by exact symbolic arithmetic on ultimately
periodic subsets of the natural numbers.
"""

__version__ = "0.1.0"
