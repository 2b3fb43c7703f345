"""
dpwheel core package

Partial injections, graphs and their partial isometries, the structure
theory of the wheel monoids, closures, Green's relations, ranks,
factorization and the verification suites.
"""

__version__ = "0.1.0"
__author__ = "dpwheel contributors"
