"""Recreational-mathematics engine.

Combinatorial game solvers, graph walk counting, L-systems compiled
through a turtle virtual machine to SVG, modular-arithmetic curve
generators, exact puzzle oracles, and Monte Carlo estimators.
"""

__version__ = "0.1.0"
