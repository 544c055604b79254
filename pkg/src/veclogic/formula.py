"""Propositional formulas: AST, parser, printer and substitution.

Concrete syntax, loosest binding last::

    !  (prefix NOT)
    &  !&       AND, NAND      left-assoc
    |  !|       OR, NOR        left-assoc
    ^           XOR            left-assoc
    ->          IMPL           right-assoc
    <->         EQUIV          left-assoc

Constants are ``1``/``true`` and ``0``/``false``; variables match
``[a-z][a-z0-9_]*``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, ClassVar, Iterator, Mapping

_IDENT = re.compile(r"[a-z][a-z0-9_]*\Z")
_KEYWORDS = {"true", "false"}


class Formula:
    """Base class for formula nodes.  Nodes are immutable and hashable."""

    __slots__ = ()

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __xor__(self, other: Formula) -> Formula:
        return Xor(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    def __rshift__(self, other: Formula) -> Formula:
        return Impl(self, other)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Const(Formula):
    value: bool

    def __repr__(self) -> str:
        return "TOP" if self.value else "BOTTOM"


@dataclass(frozen=True)
class Var(Formula):
    name: str

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not _IDENT.match(self.name) or self.name in _KEYWORDS:
            raise ValueError(f"invalid variable name {self.name!r}")

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class Binary(Formula):
    left: Formula
    right: Formula

    symbol: ClassVar[str]
    gate: ClassVar[str]
    precedence: ClassVar[int]
    right_assoc: ClassVar[bool] = False


@dataclass(frozen=True)
class And(Binary):
    symbol = "&"
    gate = "C"
    precedence = 5


@dataclass(frozen=True)
class Nand(Binary):
    symbol = "!&"
    gate = "S"
    precedence = 5


@dataclass(frozen=True)
class Or(Binary):
    symbol = "|"
    gate = "D"
    precedence = 4


@dataclass(frozen=True)
class Nor(Binary):
    symbol = "!|"
    gate = "P"
    precedence = 4


@dataclass(frozen=True)
class Xor(Binary):
    symbol = "^"
    gate = "X"
    precedence = 3


@dataclass(frozen=True)
class Impl(Binary):
    symbol = "->"
    gate = "L"
    precedence = 2
    right_assoc = True


@dataclass(frozen=True)
class Equiv(Binary):
    symbol = "<->"
    gate = "E"
    precedence = 1


TOP = Const(True)
BOTTOM = Const(False)
BINARY_TYPES: tuple[type[Binary], ...] = (And, Nand, Or, Nor, Xor, Impl, Equiv)
_BY_SYMBOL = {cls.symbol: cls for cls in BINARY_TYPES}
_NOT_PRECEDENCE = 6


def var(name: str) -> Var:
    return Var(name)


def variables_of(names: str) -> tuple[Var, ...]:
    """``variables_of("p q r")`` -> ``(Var('p'), Var('q'), Var('r'))``."""
    return tuple(Var(n) for n in names.split())


# ---------------------------------------------------------------- errors


class FormulaError(ValueError):
    kind = "error"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class LexicalError(FormulaError):
    kind = "lexical"


class FormulaSyntaxError(FormulaError):
    kind = "syntax"


class UnbalancedParenthesesError(FormulaSyntaxError):
    kind = "unbalanced"


# ---------------------------------------------------------------- lexer


@dataclass(frozen=True)
class Token:
    kind: str  # "op", "lparen", "rparen", "ident", "const", "eof"
    text: str
    line: int
    column: int


_OPERATORS = ("<->", "->", "!&", "!|", "!", "&", "|", "^")
_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch == "(":
            tokens.append(Token("lparen", ch, line, col))
            i, col = i + 1, col + 1
            continue
        if ch == ")":
            tokens.append(Token("rparen", ch, line, col))
            i, col = i + 1, col + 1
            continue
        for op in _OPERATORS:
            if text.startswith(op, i):
                tokens.append(Token("op", op, line, col))
                i, col = i + len(op), col + len(op)
                break
        else:
            if ch in "01":
                tokens.append(Token("const", ch, line, col))
                i, col = i + 1, col + 1
                continue
            m = _WORD.match(text, i)
            if m is None:
                raise LexicalError(f"unexpected character {ch!r}", line, col)
            word = m.group()
            if word in _KEYWORDS:
                tokens.append(Token("const", word, line, col))
            elif _IDENT.match(word):
                tokens.append(Token("ident", word, line, col))
            else:
                raise LexicalError(f"invalid identifier {word!r}", line, col)
            i, col = m.end(), col + len(word)
    tokens.append(Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------- parser


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.open_parens: list[Token] = []

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        f = self.expression(0)
        tok = self.tok
        if tok.kind == "rparen":
            raise UnbalancedParenthesesError("unmatched ')'", tok.line, tok.column)
        if tok.kind != "eof":
            raise FormulaSyntaxError(f"unexpected {tok.text!r}", tok.line, tok.column)
        return f

    def expression(self, min_prec: int) -> Formula:
        left = self.prefix()
        while True:
            tok = self.tok
            if tok.kind != "op" or tok.text == "!":
                break
            cls = _BY_SYMBOL[tok.text]
            if cls.precedence < min_prec:
                break
            self.advance()
            next_min = cls.precedence if cls.right_assoc else cls.precedence + 1
            left = cls(left, self.expression(next_min))
        return left

    def prefix(self) -> Formula:
        tok = self.advance()
        if tok.kind == "ident":
            return Var(tok.text)
        if tok.kind == "const":
            return TOP if tok.text in ("1", "true") else BOTTOM
        if tok.kind == "op" and tok.text == "!":
            return Not(self.expression(_NOT_PRECEDENCE))
        if tok.kind == "lparen":
            self.open_parens.append(tok)
            inner = self.expression(0)
            close = self.tok
            if close.kind != "rparen":
                if close.kind == "eof":
                    opener = self.open_parens[-1]
                    raise UnbalancedParenthesesError(
                        f"'(' opened at line {opener.line}, column {opener.column} is never closed",
                        close.line, close.column)
                raise FormulaSyntaxError(f"expected ')' but found {close.text!r}",
                                         close.line, close.column)
            self.advance()
            self.open_parens.pop()
            return inner
        if tok.kind == "eof":
            raise FormulaSyntaxError("unexpected end of input", tok.line, tok.column)
        if tok.kind == "rparen":
            if self.open_parens:
                raise FormulaSyntaxError("missing operand before ')'", tok.line, tok.column)
            raise UnbalancedParenthesesError("unmatched ')'", tok.line, tok.column)
        raise FormulaSyntaxError(f"unexpected {tok.text!r}", tok.line, tok.column)


def parse(text: str) -> Formula:
    """Parse formula text into an AST.

    >>> parse("p -> q -> r")
    Impl(left=Var('p'), right=Impl(left=Var('q'), right=Var('r')))
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------- printing


def render(f: Formula, notation: str = "infix") -> str:
    if notation == "infix":
        return _infix(f)
    if notation == "polish":
        return " ".join(_polish(f))
    raise ValueError(f"unknown notation {notation!r}")


def _precedence(f: Formula) -> int:
    if isinstance(f, Binary):
        return f.precedence
    return 100 if not isinstance(f, Not) else _NOT_PRECEDENCE


def _infix(f: Formula) -> str:
    if isinstance(f, Const):
        return "1" if f.value else "0"
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        inner = _infix(f.child)
        return "!" + (inner if _precedence(f.child) >= _NOT_PRECEDENCE else f"({inner})")
    if isinstance(f, Binary):
        p = f.precedence
        left, right = _infix(f.left), _infix(f.right)
        lp, rp = _precedence(f.left), _precedence(f.right)
        if lp < p or (lp == p and f.right_assoc):
            left = f"({left})"
        if rp < p or (rp == p and not f.right_assoc):
            right = f"({right})"
        return f"{left} {f.symbol} {right}"
    raise TypeError(f"not a formula: {f!r}")


def _polish(f: Formula) -> Iterator[str]:
    if isinstance(f, Const):
        yield "1" if f.value else "0"
    elif isinstance(f, Var):
        yield f.name
    elif isinstance(f, Not):
        yield "N"
        yield from _polish(f.child)
    elif isinstance(f, Binary):
        yield f.gate
        yield from _polish(f.left)
        yield from _polish(f.right)
    else:
        raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------- traversal


def transform(f: Formula, fn: Callable[[Formula], Formula | None]) -> Formula:
    """Rebuild ``f`` top-down; wherever ``fn`` returns a node it replaces the subtree."""
    out = fn(f)
    if out is not None:
        return out
    if isinstance(f, Not):
        child = transform(f.child, fn)
        return f if child is f.child else Not(child)
    if isinstance(f, Binary):
        left, right = transform(f.left, fn), transform(f.right, fn)
        if left is f.left and right is f.right:
            return f
        return type(f)(left, right)
    return f


def substitute(f: Formula, name: str, g: Formula) -> Formula:
    return substitute_many(f, {name: g})


def substitute_many(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Simultaneously replace each ``Var(name)`` by ``mapping[name]``."""
    return transform(f, lambda node: mapping.get(node.name) if isinstance(node, Var) else None)


def variables(f: Formula) -> tuple[str, ...]:
    """Distinct variable names in first-occurrence order."""
    seen: dict[str, None] = {}
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            seen.setdefault(node.name)
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, Binary):
            stack.append(node.right)
            stack.append(node.left)
    return tuple(seen)


def size(f: Formula) -> int:
    if isinstance(f, Not):
        return 1 + size(f.child)
    if isinstance(f, Binary):
        return 1 + size(f.left) + size(f.right)
    return 1


def depth(f: Formula) -> int:
    if isinstance(f, Not):
        return 1 + depth(f.child)
    if isinstance(f, Binary):
        return 1 + max(depth(f.left), depth(f.right))
    return 0


# ---------------------------------------------------------------- folding


def fold(f: Formula) -> Formula:
    """Constant-fold ⊤/⊥ leaves and remove double negations.

    Only rewrites that also hold for probabilistic truth vectors are used
    (``C(s⊗u) = u``, ``N² = I`` ...), so folding never changes the value of
    a formula in the many-valued evaluation.  ``x ^ x`` is *not* reduced:
    it is ``n`` only for binary ``x``.
    """
    if isinstance(f, Not):
        c = fold(f.child)
        if isinstance(c, Const):
            return Const(not c.value)
        if isinstance(c, Not):
            return c.child
        return Not(c)
    if isinstance(f, Binary):
        a, b = fold(f.left), fold(f.right)
        if isinstance(a, Const) and isinstance(b, Const):
            return Const(_BOOL_OPS[type(f)](a.value, b.value))
        if isinstance(a, Const) or isinstance(b, Const):
            return _absorb(type(f), a, b)
        return type(f)(a, b)
    return f


def _neg(f: Formula) -> Formula:
    return f.child if isinstance(f, Not) else Not(f)


def _absorb(op: type[Binary], a: Formula, b: Formula) -> Formula:
    # exactly one side is constant
    if isinstance(a, Const):
        c, x, const_left = a.value, b, True
    else:
        c, x, const_left = b.value, a, False  # type: ignore[union-attr]
    if op is And:
        return x if c else BOTTOM
    if op is Or:
        return TOP if c else x
    if op is Nand:
        return _neg(x) if c else TOP
    if op is Nor:
        return BOTTOM if c else _neg(x)
    if op is Xor:
        return _neg(x) if c else x
    if op is Equiv:
        return x if c else _neg(x)
    if op is Impl:
        if const_left:
            return x if c else TOP
        return TOP if c else _neg(x)
    raise TypeError(op)


_BOOL_OPS: dict[type[Binary], Callable[[bool, bool], bool]] = {
    And: lambda a, b: a and b,
    Or: lambda a, b: a or b,
    Impl: lambda a, b: (not a) or b,
    Nand: lambda a, b: not (a and b),
    Nor: lambda a, b: not (a or b),
    Xor: lambda a, b: a != b,
    Equiv: lambda a, b: a == b,
}


# ---------------------------------------------------------------- random corpus


def random_formula(rng: random.Random, names: tuple[str, ...] | list[str],
                   max_depth: int = 4, const_prob: float = 0.05) -> Formula:
    """Draw a random formula over ``names`` (reproducible for a seeded ``rng``)."""
    if max_depth <= 0 or rng.random() < 0.25:
        if rng.random() < const_prob:
            return TOP if rng.random() < 0.5 else BOTTOM
        return Var(rng.choice(list(names)))
    if rng.random() < 0.2:
        return Not(random_formula(rng, names, max_depth - 1, const_prob))
    cls = rng.choice(BINARY_TYPES)
    return cls(random_formula(rng, names, max_depth - 1, const_prob),
               random_formula(rng, names, max_depth - 1, const_prob))
