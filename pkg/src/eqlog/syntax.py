"""Propositional formulas, theories and ground disjunctive programs.

Negation and truth are not primitive: ``not f`` is ``Implies(f, BOT)`` and
``top`` is ``Implies(BOT, BOT)``.  Every recursion over formulas therefore
has exactly five cases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import ParseError

Vocabulary = tuple  # sorted tuple of atom names

_IDENT = r"[a-z][A-Za-z0-9_]*"
ATOM_RE = re.compile(rf"{_IDENT}(\({_IDENT}(,{_IDENT})*\))?\Z")


class Formula:
    __slots__ = ()

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __rshift__(self, other: "Formula") -> "Formula":
        return Implies(self, other)

    def __invert__(self) -> "Formula":
        return Implies(self, BOT)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    def __repr__(self):
        return "BOT"


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not ATOM_RE.match(self.name):
            raise ParseError(f"invalid atom name {self.name!r}")

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


BOT = Bottom()
TOP = Implies(BOT, BOT)


def neg(f: Formula) -> Formula:
    return Implies(f, BOT)


def is_neg(f: Formula) -> bool:
    return isinstance(f, Implies) and f.right == BOT


def _balanced(items: Sequence[Formula], op) -> Formula:
    if len(items) == 1:
        return items[0]
    mid = len(items) // 2
    return op(_balanced(items[:mid], op), _balanced(items[mid:], op))


def _fold(items, op, unit):
    items = list(items)
    if not items:
        return unit
    # long chains are built balanced to keep recursion shallow
    if len(items) > 8:
        return _balanced(items, op)
    out = items[0]
    for f in items[1:]:
        out = op(out, f)
    return out


def conj(items: Iterable[Formula]) -> Formula:
    """Conjunction of ``items``; the empty conjunction is ``TOP``."""
    return _fold(items, And, TOP)


def disj(items: Iterable[Formula]) -> Formula:
    """Disjunction of ``items``; the empty disjunction is ``BOT``."""
    return _fold(items, Or, BOT)


def simplify(f: Formula) -> Formula:
    """Constant folding with HT-valid identities only (no other rewriting)."""
    if isinstance(f, (Atom, Bottom)):
        return f
    left, right = simplify(f.left), simplify(f.right)
    if isinstance(f, And):
        if left == BOT or right == BOT:
            return BOT
        if left == TOP:
            return right
        if right == TOP:
            return left
        return And(left, right)
    if isinstance(f, Or):
        if left == TOP or right == TOP:
            return TOP
        if left == BOT:
            return right
        if right == BOT:
            return left
        return Or(left, right)
    # Implies
    if left == BOT or right == TOP:
        return TOP
    if left == TOP:
        return right
    return Implies(left, right)


def depth(f: Formula) -> int:
    if isinstance(f, (Atom, Bottom)):
        return 0
    return 1 + max(depth(f.left), depth(f.right))


# ---------------------------------------------------------------------------
# programs and theories


@dataclass(frozen=True)
class Rule:
    heads: tuple = ()
    pos_body: tuple = ()
    neg_body: tuple = ()

    def __post_init__(self):
        for part, label in ((self.heads, "head"), (self.pos_body, "positive body"),
                            (self.neg_body, "negative body")):
            if len(set(part)) != len(part):
                raise ParseError(f"repeated atom in rule {label}")
            for a in part:
                if not ATOM_RE.match(a):
                    raise ParseError(f"invalid atom name {a!r}")

    def __str__(self):
        return render_rule(self)


@dataclass(frozen=True)
class Program:
    rules: tuple = ()

    def __iter__(self):
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Theory:
    formulas: tuple = ()

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self):
        return len(self.formulas)

    def __str__(self):
        return render(self)


def rule_to_formula(r: Rule) -> Formula:
    """Translate ``K1|..|Kk :- L1,..,Lm, not Lm+1,..`` to ``body -> heads``."""
    body = [Atom(a) for a in r.pos_body] + [neg(Atom(a)) for a in r.neg_body]
    head = disj(Atom(a) for a in r.heads)
    if not body:
        return head
    return Implies(conj(body), head)


def as_theory(x) -> Theory:
    """Coerce a Theory, Program, single formula or iterable of formulas."""
    if isinstance(x, Theory):
        return x
    if isinstance(x, Program):
        return Theory(tuple(rule_to_formula(r) for r in x.rules))
    if isinstance(x, Formula):
        return Theory((x,))
    return Theory(tuple(x))


def _atoms(f: Formula, out: set):
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            out.add(g.name)
        elif not isinstance(g, Bottom):
            stack.append(g.left)
            stack.append(g.right)


def vocab(names: Iterable[str]) -> Vocabulary:
    return tuple(sorted(set(names)))


def vocabulary_of(x) -> Vocabulary:
    out: set = set()
    if isinstance(x, Formula):
        _atoms(x, out)
    elif isinstance(x, Rule):
        out.update(x.heads, x.pos_body, x.neg_body)
    elif isinstance(x, Program):
        for r in x.rules:
            out.update(r.heads, r.pos_body, r.neg_body)
    else:
        for f in x:
            out.update(vocabulary_of(f))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# lexer

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<arrow>->)
  | (?P<if>:-)
  | (?P<op>[&|(),.=-])
  | (?P<word>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

KEYWORDS = {"not", "bot", "top", "forall", "exists"}


@dataclass(frozen=True)
class Token:
    kind: str  # ident, var, keyword text, punctuation text, or "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "word":
            if value in KEYWORDS:
                tokens.append(Token(value, value, line, col))
            elif value[0].isupper():
                tokens.append(Token("var", value, line, col))
            else:
                tokens.append(Token("ident", value, line, col))
        elif kind in ("arrow", "if", "op"):
            tokens.append(Token("not" if value == "-" else value, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def at(self, *kinds) -> bool:
        return self.peek.kind in kinds

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek
        if tok.kind != kind:
            self.error(f"expected {kind!r}")
        return self.next()

    def error(self, message: str):
        tok = self.peek
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{message}, found {found}", tok.line, tok.column)


# ---------------------------------------------------------------------------
# propositional parser


def _parse_atom_name(ts: TokenStream) -> str:
    tok = ts.peek
    if tok.kind == "var":
        raise ParseError(f"atom names must start with a lowercase letter: {tok.text!r}",
                         tok.line, tok.column)
    name = ts.expect("ident").text
    if ts.at("("):
        ts.next()
        args = [_parse_ground_arg(ts)]
        while ts.at(","):
            ts.next()
            args.append(_parse_ground_arg(ts))
        ts.expect(")")
        name = f"{name}({','.join(args)})"
    return name


def _parse_ground_arg(ts: TokenStream) -> str:
    tok = ts.peek
    if tok.kind != "ident":
        if tok.kind == "var":
            raise ParseError(f"variables are not allowed in ground atoms: {tok.text!r}",
                             tok.line, tok.column)
        ts.error("expected constant")
    return ts.next().text


def _implication(ts):
    left = _disjunction(ts)
    if ts.at("->"):
        ts.next()
        return Implies(left, _implication(ts))
    return left


def _disjunction(ts):
    f = _conjunction(ts)
    while ts.at("|"):
        ts.next()
        f = Or(f, _conjunction(ts))
    return f


def _conjunction(ts):
    f = _unary(ts)
    while ts.at("&"):
        ts.next()
        f = And(f, _unary(ts))
    return f


def _unary(ts):
    if ts.at("not"):
        ts.next()
        return neg(_unary(ts))
    return _primary(ts)


def _primary(ts):
    tok = ts.peek
    if tok.kind == "bot":
        ts.next()
        return BOT
    if tok.kind == "top":
        ts.next()
        return TOP
    if tok.kind == "(":
        ts.next()
        f = _implication(ts)
        ts.expect(")")
        return f
    if tok.kind in ("ident", "var"):
        return Atom(_parse_atom_name(ts))
    ts.error("expected formula")


def parse_formula(text: str) -> Formula:
    ts = TokenStream(text)
    f = _implication(ts)
    if ts.at("."):
        ts.next()
    if not ts.at("eof"):
        ts.error("unexpected trailing input")
    return f


def parse_theory(text: str) -> Theory:
    """One ``.``-terminated formula per statement; ``%`` starts a comment."""
    ts = TokenStream(text)
    formulas = []
    while not ts.at("eof"):
        formulas.append(_implication(ts))
        ts.expect(".")
    return Theory(tuple(formulas))


def _atom_list(ts: TokenStream, sep: str) -> list[str]:
    names = [_parse_atom_name(ts)]
    while ts.at(sep):
        ts.next()
        names.append(_parse_atom_name(ts))
    return names


def parse_program(text: str) -> Program:
    ts = TokenStream(text)
    rules = []
    while not ts.at("eof"):
        start = ts.peek
        heads: list[str] = []
        pos: list[str] = []
        negs: list[str] = []
        if not ts.at(":-"):
            heads = _atom_list(ts, "|")
        if ts.at(":-"):
            ts.next()
            while not ts.at("."):
                if ts.at("not"):
                    ts.next()
                    negs.append(_parse_atom_name(ts))
                else:
                    pos.append(_parse_atom_name(ts))
                if not ts.at(","):
                    break
                ts.next()
        ts.expect(".")
        try:
            rules.append(Rule(tuple(heads), tuple(pos), tuple(negs)))
        except ParseError as exc:
            raise ParseError(str(exc), start.line, start.column) from None
    return Program(tuple(rules))


# ---------------------------------------------------------------------------
# rendering

_IMP, _OR, _AND, _UNARY, _ATOMIC = 1, 2, 3, 4, 5


def _level(f: Formula) -> int:
    if isinstance(f, (Atom, Bottom)) or f == TOP:
        return _ATOMIC
    if is_neg(f):
        return _UNARY
    return {Implies: _IMP, Or: _OR, And: _AND}.get(type(f), _UNARY)


def _render(f: Formula, min_level: int) -> str:
    text = _render_bare(f)
    if _level(f) < min_level:
        return f"({text})"
    return text


def _render_bare(f: Formula) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bottom):
        return "bot"
    if f == TOP:
        return "top"
    if is_neg(f):
        return "not " + _render(f.left, _UNARY)
    if isinstance(f, And):
        return f"{_render(f.left, _AND)} & {_render(f.right, _AND + 1)}"
    if isinstance(f, Or):
        return f"{_render(f.left, _OR)} | {_render(f.right, _OR + 1)}"
    if isinstance(f, Implies):
        return f"{_render(f.left, _IMP + 1)} -> {_render(f.right, _IMP)}"
    from .fo.syntax import render_fo  # first-order nodes

    return render_fo(f)


def render_rule(r: Rule) -> str:
    head = " | ".join(r.heads)
    body = ", ".join(list(r.pos_body) + [f"not {a}" for a in r.neg_body])
    if not r.pos_body and not r.neg_body:
        return f"{head}." if head else ":- ."
    return f"{head} :- {body}." if head else f":- {body}."


def render(x) -> str:
    if isinstance(x, Formula):
        return _render_bare(x)
    if isinstance(x, Rule):
        return render_rule(x)
    if isinstance(x, Program):
        if not x.rules:
            return "% empty program"
        return "\n".join(render_rule(r) for r in x.rules)
    if isinstance(x, Theory):
        return "\n".join(f"{_render_bare(f)}." for f in x.formulas)
    raise TypeError(f"cannot render {type(x).__name__}")


def iter_subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, (And, Or, Implies)):
        yield from iter_subformulas(f.left)
        yield from iter_subformulas(f.right)


FormulaLike = Union[Formula, Theory, Program]
