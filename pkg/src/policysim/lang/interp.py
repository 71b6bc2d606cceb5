"""Sandboxed tree-walking interpreter.

The interpreter owns nothing but an environment dict and a step budget;
every effect goes through the ``dispatch`` callback, so policy code can
only ever touch the world via registered API calls.  There are no
builtins, no attribute access and no user-defined functions, which makes
the sandbox property structural rather than policed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from ..errors import (
    ApiCallLimitExceeded,
    DivisionByZero,
    IndexOutOfRange,
    LoopLimitExceeded,
    PolicyRuntimeError,
    StepLimitExceeded,
)
from .nodes import (
    Assign,
    BinOp,
    BoolLit,
    Call,
    Expr,
    ExprStmt,
    For,
    Index,
    ListLit,
    Name,
    NoneLit,
    NumLit,
    Program,
    Stmt,
    StrLit,
    VecLit,
)


@dataclass
class InterpreterLimits:
    max_steps: int = 10000
    max_api_calls: int = 256
    max_loop_iterations: int = 1000

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_api_calls <= 0 or self.max_loop_iterations <= 0:
            raise ValueError("interpreter limits must be positive")


# dispatch(name, positional args, keyword args, call ordinal) -> runtime value
Dispatch = Callable[[str, list, dict, int], Any]


class _Interp:
    def __init__(self, dispatch: Dispatch, limits: InterpreterLimits):
        self.dispatch = dispatch
        self.limits = limits
        self.env: dict[str, Any] = {}
        self.steps = 0
        self.api_calls = 0

    def tick(self):
        self.steps += 1
        if self.steps > self.limits.max_steps:
            raise StepLimitExceeded(f"exceeded {self.limits.max_steps} interpreter steps")

    def run(self, program: Program):
        for stmt in program.body:
            self.exec_stmt(stmt)

    def exec_stmt(self, stmt: Stmt):
        self.tick()
        if isinstance(stmt, Assign):
            self.env[stmt.name] = self.eval(stmt.expr)
        elif isinstance(stmt, ExprStmt):
            self.eval(stmt.expr)
        elif isinstance(stmt, For):
            iterable = self.eval(stmt.iterable)
            if not isinstance(iterable, list):
                raise PolicyRuntimeError(
                    f"for-loop iterable must be a list, got {type(iterable).__name__}")
            if len(iterable) > self.limits.max_loop_iterations:
                raise LoopLimitExceeded(
                    f"loop over {len(iterable)} elements exceeds "
                    f"{self.limits.max_loop_iterations}")
            for item in iterable:
                self.env[stmt.var] = item
                for inner in stmt.body:
                    self.exec_stmt(inner)
        else:
            raise PolicyRuntimeError(f"unknown statement {type(stmt).__name__}")

    def eval(self, expr: Expr) -> Any:
        self.tick()
        if isinstance(expr, NumLit):
            return expr.value
        if isinstance(expr, StrLit):
            return expr.value
        if isinstance(expr, BoolLit):
            return expr.value
        if isinstance(expr, NoneLit):
            return None
        if isinstance(expr, VecLit):
            return (expr.x, expr.y, expr.z)
        if isinstance(expr, ListLit):
            return [self.eval(item) for item in expr.items]
        if isinstance(expr, Name):
            if expr.id not in self.env:
                raise PolicyRuntimeError(f"name {expr.id!r} is not defined")
            return self.env[expr.id]
        if isinstance(expr, Index):
            return self.eval_index(expr)
        if isinstance(expr, BinOp):
            return self.eval_binop(expr)
        if isinstance(expr, Call):
            return self.eval_call(expr)
        raise PolicyRuntimeError(f"unknown expression {type(expr).__name__}")

    def eval_index(self, expr: Index) -> Any:
        seq = self.eval(expr.seq)
        idx = self.eval(expr.index)
        if isinstance(idx, float) and idx.is_integer():
            idx = int(idx)
        if isinstance(idx, bool) or not isinstance(idx, int):
            raise PolicyRuntimeError(f"list index must be an integer, got {idx!r}")
        if isinstance(seq, tuple):  # a 3-vector
            seq = list(seq)
        if not isinstance(seq, list):
            raise PolicyRuntimeError(f"cannot index a {type(seq).__name__}")
        if not -len(seq) <= idx < len(seq):
            from_empty = len(seq) == 0 and getattr(seq, "from_perception", False)
            raise IndexOutOfRange(
                f"index {idx} out of range for list of length {len(seq)}",
                from_empty_perception=from_empty)
        return seq[idx]

    def eval_binop(self, expr: BinOp) -> Any:
        left = self.eval(expr.left)
        right = self.eval(expr.right)
        for side in (left, right):
            if isinstance(side, bool) or not isinstance(side, (int, float)):
                raise PolicyRuntimeError(
                    f"arithmetic on non-number {type(side).__name__}")
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        if expr.op == "/":
            if right == 0:
                raise DivisionByZero("division by zero")
            return left / right
        raise PolicyRuntimeError(f"unknown operator {expr.op!r}")

    def eval_call(self, expr: Call) -> Any:
        args = [self.eval(a) for a in expr.args]
        kwargs = {}
        for key, val in expr.kwargs:
            if key in kwargs:
                raise PolicyRuntimeError(f"duplicate keyword argument {key!r}")
            kwargs[key] = self.eval(val)
        self.api_calls += 1
        if self.api_calls > self.limits.max_api_calls:
            raise ApiCallLimitExceeded(
                f"exceeded {self.limits.max_api_calls} API calls")
        return self.dispatch(expr.name, args, kwargs, self.api_calls - 1)


def interpret(program: Program, dispatch: Dispatch,
              limits: InterpreterLimits | None = None):
    """Evaluate a program, routing every call through ``dispatch``.

    Deterministic given (program, dispatch behavior); guaranteed to
    terminate within the given limits or raise a limit error.
    """
    _Interp(dispatch, limits or InterpreterLimits()).run(program)
