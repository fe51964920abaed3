"""
Parser for session scripts.

One statement per line; `#` starts a comment. Binding statements have the
form `KEYWORD NAME = BODY`, commands are `KEYWORD ARGS`. Bodies are split
into words, integers, operators (= / -> + ^), parenthesized lists and
bracketed matrices; what the words mean is decided by the Session.

    ring R = [Y, Z] / (Y^2, Y*Z)
    ring S = R / (Y)
    ideal m = R (Y, Z)
    module X = R / (Y)
    module F = R ^ 2
    module M = R coker [Y; Z | Z; 0]
    module W = R canonical
    complex D = dualizing R
    complex K = koszul R (Y, Z)
    complex C = X shift 1
    complex G = R ranks (1, 1) twists ((0), (1)) [Y]
    complex A = cone F -> X [1; 0]
    map phi = R -> S
    gdim D X
    betti X 3
    grade-profile phi m
    fuzz tensor-bounds 100 7
"""

import re
from dataclasses import dataclass
from pathlib import Path

from semidual.errors import ScriptParseError
from semidual.logging import setup_logger

from .enums import Keyword

logger = setup_logger()

NAME_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_WORD_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_']*(?:-[A-Za-z][A-Za-z0-9_']*)*")
_NUMBER_PATTERN = re.compile(r"-?\d+")
_OPERATORS = ("->", "=", "/", "+", "^")
_CLOSING = {"(": ")", "[": "]"}


@dataclass(frozen=True)
class Token:
    """A word, number, operator or group; `column` is 1-based."""

    kind: str
    text: str
    column: int
    line: int | None = None

    def items(self) -> list[tuple[str, int]]:
        """Comma-separated entries of a group with their columns."""
        entries = []
        depth = 0
        start = 0
        for index, char in enumerate(self.text):
            if char in "([":
                depth += 1
            elif char in ")]":
                depth -= 1
            elif char == "," and depth == 0:
                entries.append((self.text[start:index], start))
                start = index + 1
        entries.append((self.text[start:], start))
        result = []
        for text, offset in entries:
            stripped = text.strip()
            if not stripped:
                if len(entries) == 1:
                    return []
                raise ScriptParseError("Empty entry in list", self.line, self.column + 1 + offset)
            lead = len(text) - len(text.lstrip())
            result.append((stripped, self.column + 1 + offset + lead))
        return result


@dataclass(frozen=True)
class Statement:
    """One parsed script line."""

    keyword: Keyword
    name: str | None
    tokens: tuple[Token, ...]
    line: int
    text: str

    def describe(self) -> str:
        return self.text.strip()


def tokenize(text: str, line: int, offset: int = 0) -> list[Token]:
    """Split a statement body; `offset` is the column of text[0] minus one."""
    tokens = []
    index = 0
    while index < len(text):
        char = text[index]
        column = offset + index + 1
        if char.isspace():
            index += 1
            continue
        if char in _CLOSING:
            end = _group_end(text, index, line, column)
            kind = "group" if char == "(" else "matrix"
            tokens.append(Token(kind, text[index + 1 : end], column, line))
            index = end + 1
            continue
        if char in ")]":
            raise ScriptParseError(f"Unbalanced {char!r}", line, column)
        operator = next((op for op in _OPERATORS if text.startswith(op, index)), None)
        number = _NUMBER_PATTERN.match(text, index)
        if number:
            tokens.append(Token("number", number.group(), column, line))
            index = number.end()
            continue
        if operator:
            tokens.append(Token("op", operator, column, line))
            index += len(operator)
            continue
        word = _WORD_PATTERN.match(text, index)
        if word:
            tokens.append(Token("word", word.group(), column, line))
            index = word.end()
            continue
        raise ScriptParseError(f"Unexpected character {char!r}", line, column)
    return tokens


def _group_end(text: str, start: int, line: int, column: int) -> int:
    stack = [_CLOSING[text[start]]]
    for index in range(start + 1, len(text)):
        char = text[index]
        if char in _CLOSING:
            stack.append(_CLOSING[char])
        elif char in ")]":
            if char != stack[-1]:
                raise ScriptParseError(f"Mismatched {char!r}", line, index + 1)
            stack.pop()
            if not stack:
                return index
    raise ScriptParseError(f"Unterminated {text[start]!r}", line, column)


class ScriptParser:
    """Parses script text into statements, checking syntax only."""

    def parse_file(self, script_path: str) -> list[Statement]:
        path = Path(script_path)
        if not path.exists():
            logger.error(f"Script not found: {script_path}")
            raise FileNotFoundError(f"Script not found: {script_path}")
        logger.info(f"Parsing script: {script_path}")
        return self.parse_text(path.read_text())

    def parse_text(self, text: str) -> list[Statement]:
        statements = []
        for number, raw in enumerate(text.splitlines(), 1):
            statement = self.parse_line(raw, number)
            if statement is not None:
                statements.append(statement)
        logger.debug(f"Parsed {len(statements)} statements")
        return statements

    def parse_line(self, raw: str, line: int) -> Statement | None:
        text = raw.split("#", 1)[0].rstrip()
        if not text.strip():
            return None
        lead = len(text) - len(text.lstrip())
        head = _WORD_PATTERN.match(text, lead)
        if head is None:
            raise ScriptParseError("Expected a keyword", line, lead + 1)
        try:
            keyword = Keyword(head.group())
        except ValueError:
            logger.error(f"Unknown keyword {head.group()!r} on line {line}")
            raise ScriptParseError(f"Unknown keyword {head.group()!r}", line, lead + 1)

        rest = text[head.end() :]
        tokens = tokenize(rest, line, head.end())
        name = None
        if keyword.binds:
            if len(tokens) < 3 or tokens[0].kind != "word" or tokens[1].text != "=":
                column = tokens[0].column if tokens else len(text) + 1
                raise ScriptParseError(f"Expected '{keyword.value} NAME = ...'", line, column)
            if not NAME_PATTERN.fullmatch(tokens[0].text):
                raise ScriptParseError(f"Invalid name {tokens[0].text!r}", line, tokens[0].column)
            name = tokens[0].text
            tokens = tokens[2:]
        return Statement(keyword, name, tuple(tokens), line, raw)
