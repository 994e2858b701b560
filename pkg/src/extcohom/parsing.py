"""Text formats: model files and element expressions.

Model files are line-based UTF-8 with `#` comments:

    generator x
    generator y
    generator w
    d w = x^y

Generators must be declared before use and get at most one differential line
(default d g = 0).  Element expressions are signed sums of terms, each an
optional rational coefficient followed by a wedge word:

    3/2 x^y - y^w

A bare rational (or a lone 0) is also accepted as a degree-0 term so that
printing and parsing are mutually inverse on every element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .dga import DGA, Element
from .errors import ParseError

_RESERVED = {"generator", "d"}


@dataclass(frozen=True)
class Token:
    kind: str  # INT, IDENT, or one of + - / ^ =
    text: str
    line: int
    column: int


def _tokenize(text: str, line: int = 1) -> list[Token]:
    tokens: list[Token] = []
    col = 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("INT", text[start:i], line, col))
            col += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("IDENT", text[start:i], line, col))
            col += i - start
            continue
        if ch in "+-/^=":
            tokens.append(Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line=line, column=col)
    return tokens


class _TokenStream:
    def __init__(self, tokens: Sequence[Token], line: int):
        self.tokens = list(tokens)
        self.pos = 0
        self.line = line

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Optional[Token]:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.next()
        if tok is None:
            raise ParseError(f"expected {what} at end of input", line=self.line, column=self._end_column())
        if tok.kind != kind:
            raise ParseError(f"expected {what}, found {tok.text!r}", line=tok.line, column=tok.column)
        return tok

    def _end_column(self) -> int:
        if self.tokens:
            last = self.tokens[-1]
            return last.column + len(last.text)
        return 1

    @property
    def exhausted(self) -> bool:
        return self.pos >= len(self.tokens)


def _parse_rational(stream: _TokenStream) -> Fraction:
    num = stream.expect("INT", "a number")
    value = Fraction(int(num.text))
    nxt = stream.peek()
    if nxt is not None and nxt.kind == "/":
        stream.next()
        den = stream.expect("INT", "a denominator")
        if int(den.text) == 0:
            raise ParseError("denominator must be positive", line=den.line, column=den.column)
        value = Fraction(int(num.text), int(den.text))
    return value


def _resolve(dga: DGA, tok: Token) -> int:
    try:
        return dga.index_of(tok.text)
    except KeyError:
        raise ParseError(f"unknown generator {tok.text!r}", line=tok.line, column=tok.column) from None


def _parse_term(stream: _TokenStream, dga: DGA, sign: int) -> Element:
    coeff = Fraction(sign)
    tok = stream.peek()
    if tok is not None and tok.kind == "INT":
        coeff *= _parse_rational(stream)
        tok = stream.peek()
        if tok is None or tok.kind != "IDENT":
            return Element.unit(coeff)
    ident = stream.expect("IDENT", "a generator name")
    word = [_resolve(dga, ident)]
    while (tok := stream.peek()) is not None and tok.kind == "^":
        stream.next()
        ident = stream.expect("IDENT", "a generator name after '^'")
        word.append(_resolve(dga, ident))
    return Element.from_word(word, coeff)


def _parse_element_stream(stream: _TokenStream, dga: DGA) -> Element:
    first = stream.peek()
    if first is None:
        raise ParseError("empty expression", line=stream.line, column=1)
    if first.kind == "INT" and first.text == "0" and len(stream.tokens) - stream.pos == 1:
        stream.next()
        return Element.zero()
    sign = 1
    tok = stream.peek()
    if tok is not None and tok.kind in "+-":
        stream.next()
        sign = -1 if tok.kind == "-" else 1
    total = _parse_term(stream, dga, sign)
    while not stream.exhausted:
        op = stream.next()
        if op.kind not in "+-":
            raise ParseError(f"expected '+' or '-', found {op.text!r}", line=op.line, column=op.column)
        total = total + _parse_term(stream, dga, -1 if op.kind == "-" else 1)
    return total


def parse_element(dga: DGA, text: str, line: int = 1) -> Element:
    """Parse a linear combination of wedge words against a model's generators."""
    stream = _TokenStream(_tokenize(text, line=line), line=line)
    return _parse_element_stream(stream, dga)


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_model(text: str) -> DGA:
    """Parse a model file into a validated DGA.

    Raises ParseError (with line and column) on bad syntax and the
    ValidationError family when the differential is structurally wrong.
    """
    names: list[str] = []
    name_set: set[str] = set()
    diff_exprs: dict[str, Element] = {}
    # The DGA is grown incrementally so differential expressions can only see
    # generators declared on earlier lines.
    partial = DGA(())
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = _strip_comment(raw)
        if not stripped.strip():
            continue
        tokens = _tokenize(stripped, line=lineno)
        stream = _TokenStream(tokens, line=lineno)
        head = stream.next()
        if head.kind != "IDENT" or head.text not in _RESERVED:
            raise ParseError(
                f"expected 'generator' or 'd', found {head.text!r}",
                line=head.line,
                column=head.column,
            )
        if head.text == "generator":
            name_tok = stream.expect("IDENT", "a generator name")
            if not stream.exhausted:
                extra = stream.next()
                raise ParseError(
                    f"unexpected {extra.text!r} after generator declaration",
                    line=extra.line,
                    column=extra.column,
                )
            if name_tok.text in _RESERVED:
                raise ParseError(
                    f"{name_tok.text!r} is reserved and cannot name a generator",
                    line=name_tok.line,
                    column=name_tok.column,
                )
            if name_tok.text in name_set:
                raise ParseError(
                    f"generator {name_tok.text!r} declared twice",
                    line=name_tok.line,
                    column=name_tok.column,
                )
            names.append(name_tok.text)
            name_set.add(name_tok.text)
            partial = DGA(tuple(names))
        else:
            target = stream.expect("IDENT", "a generator name")
            if target.text not in name_set:
                raise ParseError(
                    f"differential for undeclared generator {target.text!r}",
                    line=target.line,
                    column=target.column,
                )
            if target.text in diff_exprs:
                raise ParseError(
                    f"generator {target.text!r} has two differential lines",
                    line=target.line,
                    column=target.column,
                )
            stream.expect("=", "'='")
            diff_exprs[target.text] = _parse_element_stream(stream, partial)
    return DGA(tuple(names), diff_exprs)


HEISENBERG_MODEL_TEXT = """\
# Heisenberg nilmanifold minimal model: three degree-1 generators, d w = x^y.
generator x
generator y
generator w
d w = x^y
"""

BUILTIN_MODELS = {"heisenberg": HEISENBERG_MODEL_TEXT}


def load_model(source: str) -> DGA:
    """Resolve a CLI FILE argument: a builtin model name or a path."""
    if source in BUILTIN_MODELS:
        return parse_model(BUILTIN_MODELS[source])
    with open(source, "r", encoding="utf-8") as fh:
        return parse_model(fh.read())
