"""Exact model checking for weak plane geometries.

Coordinate models of metric planes over Q and GF(p), the motion-group
calculus on them, axiom evaluators, and theorem checkers for Steiner-Lehmus
type statements and the congruent-medians theorem.
"""

__version__ = "0.1.0"
