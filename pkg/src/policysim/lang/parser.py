"""Recursive-descent parser for the policy subset.

The language is deliberately tiny: one ``def main():`` per file whose
body is assignments, calls, for-loops over list values, indexing and
basic arithmetic.  Anything else (imports, while, nested defs, attribute
access, comprehensions, comparisons) is rejected with a positioned
ParseError.
"""

from __future__ import annotations

import hashlib

from ..errors import EmptyProgram, ParseError
from .lexer import Token, tokenize
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


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col, tok.text)

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind == "FORBIDDEN":
            self.error(f"forbidden construct {tok.text!r}")
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            got = tok.text or tok.kind
            self.error(f"expected {want!r}, got {got!r}")
        return self.advance()

    # -- grammar ------------------------------------------------------------

    def parse_program(self) -> Program:
        self.expect("KEYWORD", "def")
        name = self.expect("NAME")
        if name.text != "main":
            self.error("the entry function must be named main", name)
        self.expect("OP", "(")
        self.expect("OP", ")")
        self.expect("OP", ":")
        self.expect("NEWLINE")
        if self.peek().kind != "INDENT":
            raise EmptyProgram("main() body is empty", name.line, name.col)
        body = self.parse_block()
        tok = self.peek()
        if tok.kind != "EOF":
            self.error("unexpected code after main()", tok)
        return Program(body=body)

    def parse_block(self) -> tuple[Stmt, ...]:
        self.expect("INDENT")
        stmts: list[Stmt] = []
        while self.peek().kind not in ("DEDENT", "EOF"):
            stmts.append(self.parse_stmt())
        self.expect("DEDENT")
        if not stmts:
            self.error("empty block")
        return tuple(stmts)

    def parse_stmt(self) -> Stmt:
        tok = self.peek()
        if tok.kind == "FORBIDDEN":
            self.error(f"forbidden construct {tok.text!r}")
        if tok.kind == "KEYWORD" and tok.text == "for":
            return self.parse_for()
        if tok.kind == "KEYWORD" and tok.text == "def":
            self.error("nested function definitions are not allowed")
        if tok.kind == "NAME" and self.peek(1).kind == "OP" and self.peek(1).text == "=":
            name = self.advance()
            self.expect("OP", "=")
            expr = self.parse_expr()
            self.expect("NEWLINE")
            return Assign(name.text, expr)
        expr = self.parse_expr()
        self.expect("NEWLINE")
        return ExprStmt(expr)

    def parse_for(self) -> For:
        self.expect("KEYWORD", "for")
        var = self.expect("NAME")
        self.expect("KEYWORD", "in")
        iterable = self.parse_expr()
        self.expect("OP", ":")
        self.expect("NEWLINE")
        body = self.parse_block()
        return For(var.text, iterable, body)

    # expression precedence: (+ -) < (* /) < postfix index < atom
    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.peek().kind == "OP" and self.peek().text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.parse_factor())
        return node

    def parse_factor(self) -> Expr:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.advance()
            num = self.peek()
            if num.kind != "NUMBER":
                self.error("unary minus is only allowed on number literals", num)
            self.advance()
            return self.parse_postfix(NumLit(-_number(num.text)))
        return self.parse_postfix(self.parse_atom())

    def parse_postfix(self, node: Expr) -> Expr:
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "[":
                self.advance()
                idx = self.parse_expr()
                self.expect("OP", "]")
                node = Index(node, idx)
            elif tok.kind == "OP" and tok.text == ".":
                self.error("attribute access is not allowed")
            else:
                return node

    def parse_atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "FORBIDDEN":
            self.error(f"forbidden construct {tok.text!r}")
        if tok.kind == "NUMBER":
            self.advance()
            return NumLit(_number(tok.text))
        if tok.kind == "STRING":
            self.advance()
            return StrLit(tok.text)
        if tok.kind == "KEYWORD":
            if tok.text == "True":
                self.advance()
                return BoolLit(True)
            if tok.text == "False":
                self.advance()
                return BoolLit(False)
            if tok.text == "None":
                self.advance()
                return NoneLit()
            self.error(f"unexpected keyword {tok.text!r}")
        if tok.kind == "NAME":
            self.advance()
            if self.peek().kind == "OP" and self.peek().text == "(":
                return self.parse_call(tok.text)
            return Name(tok.text)
        if tok.kind == "OP" and tok.text == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect("OP", ")")
            return inner
        if tok.kind == "OP" and tok.text == "[":
            return self.parse_list()
        self.error(f"unexpected token {tok.text or tok.kind!r}")

    def parse_call(self, name: str) -> Call:
        self.expect("OP", "(")
        args: list[Expr] = []
        kwargs: list[tuple[str, Expr]] = []
        while not (self.peek().kind == "OP" and self.peek().text == ")"):
            tok = self.peek()
            if (tok.kind == "NAME" and self.peek(1).kind == "OP"
                    and self.peek(1).text == "="):
                self.advance()
                self.expect("OP", "=")
                kwargs.append((tok.text, self.parse_expr()))
            else:
                if kwargs:
                    self.error("positional argument after keyword argument", tok)
                args.append(self.parse_expr())
            if self.peek().kind == "OP" and self.peek().text == ",":
                self.advance()
            elif not (self.peek().kind == "OP" and self.peek().text == ")"):
                self.error("expected ',' or ')' in argument list")
        self.expect("OP", ")")
        return Call(name, tuple(args), tuple(kwargs))

    def parse_list(self) -> Expr:
        self.expect("OP", "[")
        items: list[Expr] = []
        while not (self.peek().kind == "OP" and self.peek().text == "]"):
            items.append(self.parse_expr())
            if self.peek().kind == "OP" and self.peek().text == ",":
                self.advance()
            elif not (self.peek().kind == "OP" and self.peek().text == "]"):
                self.error("expected ',' or ']' in list literal")
        self.expect("OP", "]")
        if len(items) == 3 and all(isinstance(it, NumLit) for it in items):
            return VecLit(float(items[0].value), float(items[1].value), float(items[2].value))
        return ListLit(tuple(items))


def _number(text: str) -> float | int:
    if "." in text or "e" in text or "E" in text:
        return float(text)
    return int(text)


def parse(source: str | bytes) -> Program:
    """Parse policy source into a Program.

    Raises ParseError (with line/column) on any construct outside the
    grammar, EmptyProgram when there is no main() body.
    """
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"source is not valid UTF-8: {exc}", 1, 1) from None
    digest = hashlib.sha256(source.encode("utf-8")).hexdigest()
    tokens = tokenize(source)
    if tokens[0].kind == "EOF":
        raise EmptyProgram("no main() found", 1, 1)
    parser = _Parser(tokens)
    program = parser.parse_program()
    return Program(body=program.body, source_digest=digest)
