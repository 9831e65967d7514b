"""Two-layered falsification of hybrid systems.

A tree search over time-staged input regions (upper layer) guides stochastic
hill-climbing over concrete input values (lower layer), hunting for an input
signal whose simulated output violates a signal-temporal-logic specification.
"""

__version__ = "0.1.0"

from .signals import PiecewiseConstantInput, Signal, concat, realize, restrict, shift
from .stl import boolean_sat, parse, robustness

__all__ = [
    "__version__",
    "Signal", "PiecewiseConstantInput", "concat", "restrict", "shift", "realize",
    "parse", "robustness", "boolean_sat",
]
