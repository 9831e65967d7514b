"""Formula and expression trees for signal temporal logic.

Core constructors are Atom (an expression compared strictly against 0),
False, Not, And, and interval-bounded Until.  Everything else (or, implies,
true, eventually, always, non-strict comparisons) is stored desugared.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# ---------------------------------------------------------------------------
# arithmetic expressions over named signal variables


class Expr:
    """Base class for atom expressions: +, -, *, constants, variables, abs, min, max."""

    def variables(self) -> set[str]:
        raise NotImplementedError

    def eval(self, env: dict[str, np.ndarray]):
        """Evaluate over an environment of per-variable sample arrays."""
        raise NotImplementedError

    def to_text(self) -> str:
        raise NotImplementedError

    # precedence for printing: 1 add/sub, 2 mul, 3 atomic
    _prec = 3

    def _paren(self, level: int) -> str:
        text = self.to_text()
        return f"({text})" if self._prec < level else text


@dataclass(frozen=True)
class Const(Expr):
    value: float

    def variables(self):
        return set()

    def eval(self, env):
        return self.value

    def to_text(self):
        return repr(self.value) if self.value >= 0 else f"({self.value!r})"


@dataclass(frozen=True)
class Var(Expr):
    name: str

    def variables(self):
        return {self.name}

    def eval(self, env):
        return env[self.name]

    def to_text(self):
        return self.name


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr
    _prec = 1

    def variables(self):
        return self.left.variables() | self.right.variables()

    def eval(self, env):
        return self.left.eval(env) + self.right.eval(env)

    def to_text(self):
        return f"{self.left._paren(1)} + {self.right._paren(2)}"


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr
    _prec = 1

    def variables(self):
        return self.left.variables() | self.right.variables()

    def eval(self, env):
        return self.left.eval(env) - self.right.eval(env)

    def to_text(self):
        return f"{self.left._paren(1)} - {self.right._paren(2)}"


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr
    _prec = 2

    def variables(self):
        return self.left.variables() | self.right.variables()

    def eval(self, env):
        return self.left.eval(env) * self.right.eval(env)

    def to_text(self):
        return f"{self.left._paren(2)} * {self.right._paren(3)}"


@dataclass(frozen=True)
class Neg(Expr):
    child: Expr
    _prec = 2

    def variables(self):
        return self.child.variables()

    def eval(self, env):
        return -self.child.eval(env)

    def to_text(self):
        return f"-{self.child._paren(3)}"


@dataclass(frozen=True)
class Abs(Expr):
    child: Expr

    def variables(self):
        return self.child.variables()

    def eval(self, env):
        return np.abs(self.child.eval(env))

    def to_text(self):
        return f"abs({self.child.to_text()})"


@dataclass(frozen=True)
class Min(Expr):
    left: Expr
    right: Expr

    def variables(self):
        return self.left.variables() | self.right.variables()

    def eval(self, env):
        return np.minimum(self.left.eval(env), self.right.eval(env))

    def to_text(self):
        return f"min({self.left.to_text()}, {self.right.to_text()})"


@dataclass(frozen=True)
class Max(Expr):
    left: Expr
    right: Expr

    def variables(self):
        return self.left.variables() | self.right.variables()

    def eval(self, env):
        return np.maximum(self.left.eval(env), self.right.eval(env))

    def to_text(self):
        return f"max({self.left.to_text()}, {self.right.to_text()})"


# ---------------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class TimeInterval:
    """A closed non-singular interval [lo, hi]; hi may be +inf."""

    lo: float
    hi: float

    def __post_init__(self):
        if self.lo < 0:
            raise ValueError(f"interval lower bound must be >= 0, got {self.lo!r}")
        if not self.lo < self.hi:
            raise ValueError(f"interval [{self.lo!r}, {self.hi!r}] must satisfy lo < hi")

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.hi)

    def to_text(self) -> str:
        hi = "inf" if self.unbounded else repr(self.hi)
        return f"[{self.lo!r},{hi}]"


FULL_INTERVAL = TimeInterval(0.0, math.inf)


class Formula:
    """Base class for STL formulas in desugared core form."""

    def variables(self) -> set[str]:
        raise NotImplementedError

    def to_text(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class Atom(Formula):
    """Strict comparison ``expr > 0``."""

    expr: Expr

    def variables(self):
        return self.expr.variables()

    def to_text(self):
        return f"{self.expr.to_text()} > 0"


@dataclass(frozen=True)
class FalseFormula(Formula):
    def variables(self):
        return set()

    def to_text(self):
        return "false"


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    def variables(self):
        return self.child.variables()

    def to_text(self):
        return f"!({self.child.to_text()})"


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def variables(self):
        return self.left.variables() | self.right.variables()

    def to_text(self):
        return f"({self.left.to_text()}) && ({self.right.to_text()})"


@dataclass(frozen=True)
class Until(Formula):
    interval: TimeInterval
    left: Formula
    right: Formula

    def variables(self):
        return self.left.variables() | self.right.variables()

    def to_text(self):
        return f"({self.left.to_text()}) U{self.interval.to_text()} ({self.right.to_text()})"


FALSE = FalseFormula()
TRUE = Not(FALSE)


# derived constructors, all stored desugared


def or_(left: Formula, right: Formula) -> Formula:
    return Not(And(Not(left), Not(right)))


def implies(left: Formula, right: Formula) -> Formula:
    return or_(Not(left), right)


def eventually(interval: TimeInterval, child: Formula) -> Formula:
    return Until(interval, TRUE, child)


def always(interval: TimeInterval, child: Formula) -> Formula:
    return Not(eventually(interval, Not(child)))


def gt(left: Expr, right: Expr) -> Formula:
    """left > right, normalized to ``left - right > 0``."""
    return Atom(Sub(left, right))


def ge(left: Expr, right: Expr) -> Formula:
    """left >= right; robust semantics cannot separate it from >."""
    return Atom(Sub(left, right))


def lt(left: Expr, right: Expr) -> Formula:
    """left < right, normalized to ``!(left - right > 0)``."""
    return Not(Atom(Sub(left, right)))


def le(left: Expr, right: Expr) -> Formula:
    return Not(Atom(Sub(left, right)))
