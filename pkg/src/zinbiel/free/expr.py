"""Expression language for elements of Zin(X).

Grammar (``o``/``*``/``∘`` is the Zinbiel product, ``*`` chains read as
left-nested products, ``sh``/``⧢`` the super shuffle)::

    expr     := term { ("+" | "-") term }
    term     := [ "-" ] [ rational "*" ] shuffle
    shuffle  := product { "sh" product }
    product  := factor { ("o" | "*") factor }
    factor   := ident | "(" expr ")" | "[" expr "," expr "]"
              | "{" expr "," expr "}" | "bar" "(" expr ")"
    rational := integer [ "/" positive-integer ]
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from ..graded import Alphabet, FreeElement, format_scalar, scalar
from .products import (
    bar,
    left_nested,
    super_anticommutator,
    super_commutator,
    super_shuffle,
    zinbiel_product,
)


class Expr:
    __slots__ = ()

    def __str__(self):
        return format_expr(self)


@dataclass(frozen=True)
class Gen(Expr):
    name: str


@dataclass(frozen=True)
class Zin(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Shuffle(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class SCom(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class SAnti(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Scale(Expr):
    q: Fraction
    expr: Expr


@dataclass(frozen=True)
class Sum(Expr):
    terms: tuple


@dataclass(frozen=True)
class Bar(Expr):
    expr: Expr


@dataclass(frozen=True)
class LeftNest(Expr):
    items: tuple

    def __post_init__(self):
        if len(self.items) < 2:
            raise ValueError("LeftNest needs at least two factors")


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>[-+*/()\[\]{},∘⧢])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"o": "o", "sh": "sh", "bar": "bar", "∘": "o", "⧢": "sh"}


@dataclass
class Token:
    kind: str  # 'int', 'ident', 'o', 'sh', 'bar', punctuation, 'eof'
    text: str
    line: int
    col: int


def tokenize(src: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", line, pos - line_start + 1)
        text = m.group()
        col = pos - line_start + 1
        if m.lastgroup == "ws":
            for i, ch in enumerate(text):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        elif m.lastgroup == "int":
            tokens.append(Token("int", text, line, col))
        elif m.lastgroup == "ident":
            tokens.append(Token(_KEYWORDS.get(text, "ident"), text, line, col))
        else:
            tokens.append(Token(_KEYWORDS.get(text, text), text, line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


_CLOSERS = {"(": ")", "[": "]", "{": "}"}


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def expect(self, kind, opener=None) -> Token:
        if self.tok.kind != kind:
            if opener is not None:
                found = "end of input" if self.tok.kind == "eof" else repr(self.tok.text)
                self.fail(
                    f"unbalanced {opener.text!r} opened at {opener.line}:{opener.col}: "
                    f"expected {kind!r}, found {found}"
                )
            self.fail(f"expected {kind!r}, found {self.tok.text or 'end of input'!r}")
        return self.take()

    def parse(self) -> Expr:
        if self.tok.kind == "eof":
            self.fail("empty expression")
        e = self.expr()
        if self.tok.kind != "eof":
            if self.tok.kind in (")", "]", "}"):
                self.fail(f"unbalanced {self.tok.text!r}")
            self.fail(f"unexpected {self.tok.text!r}")
        return e

    def expr(self) -> Expr:
        terms = [self.term()]
        while self.tok.kind in ("+", "-"):
            op = self.take()
            t = self.term()
            if op.kind == "-":
                t = Scale(-t.q, t.expr) if isinstance(t, Scale) else Scale(Fraction(-1), t)
            terms.append(t)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def _rational_ahead(self) -> bool:
        # integer ["/" integer] "*"
        if self.tok.kind != "int":
            return False
        k = 1
        if self.peek(1).kind == "/":
            if self.peek(2).kind != "int":
                return False
            k = 3
        return self.peek(k).kind == "*"

    def term(self) -> Expr:
        negate = False
        if self.tok.kind == "-":
            self.take()
            negate = True
        q = None
        if self._rational_ahead():
            num = self.take()
            den = 1
            if self.tok.kind == "/":
                self.take()
                dtok = self.expect("int")
                den = int(dtok.text)
                if den == 0:
                    self.fail("zero denominator", dtok)
            q = Fraction(int(num.text), den)
            self.expect("*")
        elif self.tok.kind == "int":
            self.fail("a scalar must be followed by '*' and a factor")
        body = self.shuffle()
        if negate:
            q = -(q if q is not None else Fraction(1))
        return body if q is None else Scale(q, body)

    def shuffle(self) -> Expr:
        left = self.product()
        while self.tok.kind == "sh":
            self.take()
            left = Shuffle(left, self.product())
        return left

    def product(self) -> Expr:
        factors = [self.factor()]
        ops = []
        while self.tok.kind in ("o", "*"):
            ops.append(self.take().kind)
            factors.append(self.factor())
        if not ops:
            return factors[0]
        if all(op == "*" for op in ops):
            return LeftNest(tuple(factors))
        acc = factors[0]
        for f in factors[1:]:
            acc = Zin(acc, f)
        return acc

    def factor(self) -> Expr:
        t = self.tok
        if t.kind == "ident":
            self.take()
            return Gen(t.text)
        if t.kind == "bar":
            self.take()
            opener = self.expect("(")
            inner = self.expr()
            self.expect(")", opener)
            return Bar(inner)
        if t.kind == "(":
            opener = self.take()
            inner = self.expr()
            self.expect(")", opener)
            return inner
        if t.kind in ("[", "{"):
            opener = self.take()
            left = self.expr()
            self.expect(",", opener)
            right = self.expr()
            self.expect(_CLOSERS[t.kind], opener)
            return SCom(left, right) if t.kind == "[" else SAnti(left, right)
        if t.kind == "eof":
            self.fail("unexpected end of input")
        if t.kind in (")", "]", "}"):
            self.fail(f"unbalanced {t.text!r}")
        if t.kind in ("o", "sh", "*", "/", "+", ","):
            self.fail(f"operator {t.text!r} is missing its left operand")
        self.fail(f"unexpected {t.text!r}")


def parse_expr(src: str) -> Expr:
    return _Parser(src).parse()


# Printing.  Precedence levels: 0 sum, 1 term (scale), 2 shuffle, 3 product, 4 atom.

def _level(e: Expr) -> int:
    if isinstance(e, Sum):
        return 0
    if isinstance(e, Scale):
        return 1
    if isinstance(e, Shuffle):
        return 2
    if isinstance(e, (Zin, LeftNest)):
        return 3
    return 4


def _wrap(e: Expr, min_level: int) -> str:
    s = format_expr(e)
    return s if _level(e) >= min_level else f"({s})"


def format_expr(e: Expr) -> str:
    """Canonical text; ``parse_expr(format_expr(e))`` gives back ``e`` for parsed ``e``."""
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Bar):
        return f"bar({format_expr(e.expr)})"
    if isinstance(e, SCom):
        return f"[{format_expr(e.left)}, {format_expr(e.right)}]"
    if isinstance(e, SAnti):
        return f"{{{format_expr(e.left)}, {format_expr(e.right)}}}"
    if isinstance(e, LeftNest):
        return " * ".join(_wrap(x, 4) for x in e.items)
    if isinstance(e, Zin):
        # left-associative: only the right operand needs to be atomic
        return f"{_wrap(e.left, 3) if not isinstance(e.left, LeftNest) else '(' + format_expr(e.left) + ')'} o {_wrap(e.right, 4)}"
    if isinstance(e, Shuffle):
        return f"{_wrap(e.left, 2)} sh {_wrap(e.right, 3)}"
    if isinstance(e, Scale):
        q = scalar(e.q)
        body = _wrap(e.expr, 2)
        if q == -1:
            return f"-{body}"
        return f"{format_scalar(q)}*{body}"
    if isinstance(e, Sum):
        parts = [_wrap(e.terms[0], 1)]
        for t in e.terms[1:]:
            if isinstance(t, Scale) and t.q < 0:
                neg = Scale(-t.q, t.expr)
                parts.append(f" - {_wrap(t.expr, 2) if neg.q == 1 else format_expr(neg)}")
            else:
                parts.append(f" + {_wrap(t, 1)}")
        return "".join(parts)
    raise TypeError(f"not an expression node: {e!r}")


def expand(e, alphabet: Alphabet) -> FreeElement:
    """Evaluate an expression (or its source text) to a FreeElement."""
    if isinstance(e, str):
        e = parse_expr(e)
    return _eval(e, alphabet)


def _eval(e: Expr, X: Alphabet) -> FreeElement:
    if isinstance(e, Gen):
        return FreeElement.from_word((X[e.name],))
    if isinstance(e, Zin):
        return zinbiel_product(_eval(e.left, X), _eval(e.right, X))
    if isinstance(e, LeftNest):
        return left_nested(*(_eval(x, X) for x in e.items))
    if isinstance(e, Shuffle):
        return super_shuffle(_eval(e.left, X), _eval(e.right, X))
    if isinstance(e, SCom):
        return super_commutator(_eval(e.left, X), _eval(e.right, X))
    if isinstance(e, SAnti):
        return super_anticommutator(_eval(e.left, X), _eval(e.right, X))
    if isinstance(e, Scale):
        return _eval(e.expr, X) * e.q
    if isinstance(e, Sum):
        out = FreeElement.zero()
        for t in e.terms:
            out = out + _eval(t, X)
        return out
    if isinstance(e, Bar):
        return bar(_eval(e.expr, X))
    raise TypeError(f"not an expression node: {e!r}")


def generators_of(e: Expr) -> set:
    if isinstance(e, Gen):
        return {e.name}
    out = set()
    for child in _children(e):
        out |= generators_of(child)
    return out


def _children(e: Expr):
    if isinstance(e, (Zin, Shuffle, SCom, SAnti)):
        return (e.left, e.right)
    if isinstance(e, (Scale, Bar)):
        return (e.expr,)
    if isinstance(e, Sum):
        return e.terms
    if isinstance(e, LeftNest):
        return e.items
    return ()
