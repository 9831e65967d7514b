"""Signal temporal logic: formula trees, parsing, and robust semantics."""

from .formula import (
    FALSE,
    FULL_INTERVAL,
    TRUE,
    Abs,
    Add,
    And,
    Atom,
    Const,
    Expr,
    FalseFormula,
    Formula,
    Max,
    Min,
    Mul,
    Neg,
    Not,
    Sub,
    TimeInterval,
    Until,
    Var,
    always,
    eventually,
    ge,
    gt,
    implies,
    le,
    lt,
    or_,
)
from .parser import parse
from .robustness import boolean_sat, in_interval, robustness

__all__ = [
    "FALSE", "FULL_INTERVAL", "TRUE",
    "Abs", "Add", "And", "Atom", "Const", "Expr", "FalseFormula", "Formula",
    "Max", "Min", "Mul", "Neg", "Not", "Sub", "TimeInterval", "Until", "Var",
    "always", "eventually", "ge", "gt", "implies", "le", "lt", "or_",
    "parse", "robustness", "boolean_sat", "in_interval",
]
