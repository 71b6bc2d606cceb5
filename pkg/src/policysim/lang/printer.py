"""Canonical pretty-printer: 4-space indent, minimal parentheses.

parse(pretty_print(ast)) is structurally equal to ast for every AST the
parser can produce.
"""

from __future__ import annotations

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

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _escape(text: str) -> str:
    out = []
    for ch in text:
        if ch == "\\":
            out.append("\\\\")
        elif ch == "'":
            out.append("\\'")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ch == "\r":
            out.append("\\r")
        else:
            out.append(ch)
    return "".join(out)


def _num(value: float | int) -> str:
    if isinstance(value, bool):  # guard: bools are not numbers here
        raise TypeError("bool in NumLit")
    return repr(value)


def format_expr(expr: Expr, parent_prec: int = 0, right_side: bool = False) -> str:
    if isinstance(expr, NumLit):
        return _num(expr.value)
    if isinstance(expr, StrLit):
        return f"'{_escape(expr.value)}'"
    if isinstance(expr, BoolLit):
        return "True" if expr.value else "False"
    if isinstance(expr, NoneLit):
        return "None"
    if isinstance(expr, Name):
        return expr.id
    if isinstance(expr, VecLit):
        return f"[{_num(expr.x)}, {_num(expr.y)}, {_num(expr.z)}]"
    if isinstance(expr, ListLit):
        return "[" + ", ".join(format_expr(it) for it in expr.items) + "]"
    if isinstance(expr, Index):
        return f"{format_expr(expr.seq, 99)}[{format_expr(expr.index)}]"
    if isinstance(expr, Call):
        parts = [format_expr(a) for a in expr.args]
        parts += [f"{k}={format_expr(v)}" for k, v in expr.kwargs]
        return f"{expr.name}({', '.join(parts)})"
    if isinstance(expr, BinOp):
        prec = _PREC[expr.op]
        left = format_expr(expr.left, prec, False)
        right = format_expr(expr.right, prec, True)
        text = f"{left} {expr.op} {right}"
        if prec < parent_prec or (prec == parent_prec and right_side):
            return f"({text})"
        return text
    raise TypeError(f"unknown expression node {type(expr).__name__}")


def _format_stmt(stmt: Stmt, indent: int, lines: list[str]):
    pad = "    " * indent
    if isinstance(stmt, Assign):
        lines.append(f"{pad}{stmt.name} = {format_expr(stmt.expr)}")
    elif isinstance(stmt, ExprStmt):
        lines.append(f"{pad}{format_expr(stmt.expr)}")
    elif isinstance(stmt, For):
        lines.append(f"{pad}for {stmt.var} in {format_expr(stmt.iterable)}:")
        for inner in stmt.body:
            _format_stmt(inner, indent + 1, lines)
    else:
        raise TypeError(f"unknown statement node {type(stmt).__name__}")


def pretty_print(program: Program) -> str:
    lines = ["def main():"]
    for stmt in program.body:
        _format_stmt(stmt, 1, lines)
    return "\n".join(lines) + "\n"
