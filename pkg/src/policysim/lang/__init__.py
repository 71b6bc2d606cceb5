"""Restricted policy language: parse, pretty-print, and interpret."""

from .nodes import (
    Assign,
    BinOp,
    BoolLit,
    Call,
    ExprStmt,
    For,
    Index,
    ListLit,
    Name,
    NoneLit,
    NumLit,
    Program,
    StrLit,
    VecLit,
)
from .parser import parse
from .printer import pretty_print
from .interp import InterpreterLimits, interpret

__all__ = [
    "Assign", "BinOp", "BoolLit", "Call", "ExprStmt", "For", "Index",
    "ListLit", "Name", "NoneLit", "NumLit", "Program", "StrLit", "VecLit",
    "parse", "pretty_print", "InterpreterLimits", "interpret",
]
