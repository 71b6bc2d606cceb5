"""AST node definitions.

Nodes are frozen dataclasses over tuples, so structural equality is the
default and parse(pretty_print(ast)) == ast is directly testable.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class Expr:
    pass


class Stmt:
    pass


@dataclass(frozen=True)
class NumLit(Expr):
    value: float | int


@dataclass(frozen=True)
class StrLit(Expr):
    value: str


@dataclass(frozen=True)
class BoolLit(Expr):
    value: bool


@dataclass(frozen=True)
class NoneLit(Expr):
    pass


@dataclass(frozen=True)
class Name(Expr):
    id: str


@dataclass(frozen=True)
class VecLit(Expr):
    """A 3-element all-numeric list literal, e.g. a direction [0, 0, 1]."""

    x: float
    y: float
    z: float


@dataclass(frozen=True)
class ListLit(Expr):
    items: tuple[Expr, ...]


@dataclass(frozen=True)
class Index(Expr):
    seq: Expr
    index: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: str  # one of + - * /
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call(Expr):
    name: str
    args: tuple[Expr, ...]
    kwargs: tuple[tuple[str, Expr], ...] = ()


@dataclass(frozen=True)
class Assign(Stmt):
    name: str
    expr: Expr


@dataclass(frozen=True)
class ExprStmt(Stmt):
    expr: Expr


@dataclass(frozen=True)
class For(Stmt):
    var: str
    iterable: Expr
    body: tuple[Stmt, ...]


@dataclass(frozen=True)
class Program:
    body: tuple[Stmt, ...]
    source_digest: str = field(default="", compare=False)
