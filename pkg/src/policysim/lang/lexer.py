"""Tokenizer with indentation tracking.

Produces NAME / NUMBER / STRING / KEYWORD / OP / NEWLINE / INDENT /
DEDENT / EOF tokens; every token carries its 1-based line and column so
parse errors are positioned.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError

# the subset's own keywords plus Python keywords we reject with a clear message
LANG_KEYWORDS = {"def", "for", "in", "True", "False", "None"}
FORBIDDEN_KEYWORDS = {
    "import", "from", "while", "if", "elif", "else", "class", "lambda",
    "return", "yield", "with", "try", "except", "finally", "raise", "pass",
    "break", "continue", "not", "and", "or", "is", "del", "global",
    "nonlocal", "assert", "async", "await", "exec", "print",
}

_OPS = {"(", ")", "[", "]", ",", ":", "=", "+", "-", "*", "/", "."}


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.line}:{self.col})"


_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", "\\": "\\", "'": "'", '"': '"'}


def tokenize(source: str) -> list[Token]:
    if not isinstance(source, str):
        raise ParseError("source must be text", 1, 1)
    tokens: list[Token] = []
    indent_stack = [0]
    lines = source.split("\n")
    depth = 0  # bracket nesting: newlines inside brackets are not statement breaks

    for lineno, raw in enumerate(lines, start=1):
        i = 0
        n = len(raw)
        # measure indentation
        while i < n and raw[i] in " \t":
            if raw[i] == "\t":
                raise ParseError("tabs are not allowed in indentation", lineno, i + 1)
            i += 1
        rest = raw[i:]
        if depth == 0:
            if not rest or rest.startswith("#"):
                continue  # blank / comment-only line
            indent = i
            if indent > indent_stack[-1]:
                indent_stack.append(indent)
                tokens.append(Token("INDENT", "", lineno, 1))
            else:
                while indent < indent_stack[-1]:
                    indent_stack.pop()
                    tokens.append(Token("DEDENT", "", lineno, 1))
                if indent != indent_stack[-1]:
                    raise ParseError("inconsistent indentation", lineno, indent + 1)

        while i < n:
            ch = raw[i]
            col = i + 1
            if ch in " \t":
                i += 1
                continue
            if ch == "#":
                break
            if ch.isdigit() or (ch == "." and i + 1 < n and raw[i + 1].isdigit()):
                j = i
                seen_dot = False
                seen_exp = False
                while j < n:
                    c = raw[j]
                    if c.isdigit():
                        j += 1
                    elif c == "." and not seen_dot and not seen_exp:
                        seen_dot = True
                        j += 1
                    elif c in "eE" and not seen_exp and j > i:
                        seen_exp = True
                        j += 1
                        if j < n and raw[j] in "+-":
                            j += 1
                    else:
                        break
                text = raw[i:j]
                try:
                    float(text)
                except ValueError:
                    raise ParseError(f"malformed number {text!r}", lineno, col) from None
                tokens.append(Token("NUMBER", text, lineno, col))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (raw[j].isalnum() or raw[j] == "_"):
                    j += 1
                text = raw[i:j]
                if text in LANG_KEYWORDS:
                    tokens.append(Token("KEYWORD", text, lineno, col))
                elif text in FORBIDDEN_KEYWORDS:
                    tokens.append(Token("FORBIDDEN", text, lineno, col))
                else:
                    tokens.append(Token("NAME", text, lineno, col))
                i = j
                continue
            if ch in "'\"":
                quote = ch
                j = i + 1
                out = []
                while True:
                    if j >= n:
                        raise ParseError("unterminated string literal", lineno, col)
                    c = raw[j]
                    if c == "\\":
                        if j + 1 >= n:
                            raise ParseError("unterminated escape", lineno, j + 1)
                        esc = raw[j + 1]
                        if esc not in _ESCAPES:
                            raise ParseError(f"unknown escape \\{esc}", lineno, j + 1)
                        out.append(_ESCAPES[esc])
                        j += 2
                        continue
                    if c == quote:
                        break
                    out.append(c)
                    j += 1
                tokens.append(Token("STRING", "".join(out), lineno, col))
                i = j + 1
                continue
            if ch == "=" and i + 1 < n and raw[i + 1] == "=":
                raise ParseError("comparison operators are not part of the language", lineno, col)
            if ch in _OPS:
                if ch in "([":
                    depth += 1
                elif ch in ")]":
                    depth = max(0, depth - 1)
                tokens.append(Token("OP", ch, lineno, col))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", lineno, col)

        if depth == 0 and tokens and tokens[-1].kind not in ("NEWLINE", "INDENT", "DEDENT"):
            tokens.append(Token("NEWLINE", "", lineno, n + 1))

    last_line = len(lines)
    while len(indent_stack) > 1:
        indent_stack.pop()
        tokens.append(Token("DEDENT", "", last_line, 1))
    tokens.append(Token("EOF", "", last_line, 1))
    return tokens
