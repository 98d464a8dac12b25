"""Function-free first-order formulas.

Connectives reuse the propositional ``And``/``Or``/``Implies``/``BOT`` nodes;
the first-order leaves are predicate atoms and equalities, and ``Forall`` /
``Exists`` bind one variable each.  Variables are uppercase identifiers and
constants lowercase ones.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from ..errors import ParseError
from ..syntax import (BOT, TOP, And, Atom, Bottom, Formula, Implies, Or, TokenStream, is_neg,
                      neg)

_VAR_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")
_CONST_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not _VAR_RE.match(self.name):
            raise ParseError(f"invalid variable name {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __post_init__(self):
        if not _CONST_RE.match(self.name):
            raise ParseError(f"invalid constant name {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class PredAtom(Formula):
    pred: str
    args: tuple = ()


@dataclass(frozen=True)
class Equal(Formula):
    left: object
    right: object


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


Quantified = (Forall, Exists)
Binary = (And, Or, Implies)


def is_atomic(f: Formula) -> bool:
    return isinstance(f, (PredAtom, Equal, Bottom, Atom))


def term_vars(f: Formula) -> set[str]:
    """Variable names occurring in the atom ``f``."""
    if isinstance(f, PredAtom):
        return {t.name for t in f.args if isinstance(t, Var)}
    if isinstance(f, Equal):
        return {t.name for t in (f.left, f.right) if isinstance(t, Var)}
    return set()


def free_vars(f: Formula) -> set[str]:
    if is_atomic(f):
        return term_vars(f)
    if isinstance(f, Quantified):
        return free_vars(f.body) - {f.var}
    return free_vars(f.left) | free_vars(f.right)


def constants_of(f) -> set[str]:
    if isinstance(f, (list, tuple)):
        return set().union(*(constants_of(g) for g in f)) if f else set()
    if isinstance(f, PredAtom):
        return {t.name for t in f.args if isinstance(t, Const)}
    if isinstance(f, Equal):
        return {t.name for t in (f.left, f.right) if isinstance(t, Const)}
    if isinstance(f, Bottom):
        return set()
    if isinstance(f, Quantified):
        return constants_of(f.body)
    return constants_of(f.left) | constants_of(f.right)


def is_quantifier_free(f: Formula) -> bool:
    if is_atomic(f):
        return True
    if isinstance(f, Quantified):
        return False
    return is_quantifier_free(f.left) and is_quantifier_free(f.right)


def is_prenex(f: Formula) -> bool:
    while isinstance(f, Quantified):
        f = f.body
    return is_quantifier_free(f)


def split_prenex(f: Formula) -> tuple[list[tuple[type, str]], Formula]:
    prefix = []
    while isinstance(f, Quantified):
        prefix.append((type(f), f.var))
        f = f.body
    return prefix, f


def build_prenex(prefix, matrix: Formula) -> Formula:
    for q, x in reversed(prefix):
        matrix = q(x, matrix)
    return matrix


def substitute(f: Formula, mapping: dict) -> Formula:
    """Replace free variables by terms according to ``mapping`` (name -> term)."""
    if isinstance(f, PredAtom):
        return PredAtom(f.pred, tuple(mapping.get(t.name, t) if isinstance(t, Var) else t
                                      for t in f.args))
    if isinstance(f, Equal):
        sub = [mapping.get(t.name, t) if isinstance(t, Var) else t for t in (f.left, f.right)]
        return Equal(*sub)
    if isinstance(f, Bottom):
        return f
    if isinstance(f, Quantified):
        inner = {k: v for k, v in mapping.items() if k != f.var}
        return type(f)(f.var, substitute(f.body, inner))
    return type(f)(substitute(f.left, mapping), substitute(f.right, mapping))


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Quantified):
        yield from subformulas(f.body)
    elif isinstance(f, Binary):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


# ---------------------------------------------------------------------------
# parser


def _term(ts: TokenStream):
    tok = ts.peek
    if tok.kind == "var":
        return Var(ts.next().text)
    if tok.kind == "ident":
        return Const(ts.next().text)
    ts.error("expected term")


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
    if ts.at("forall", "exists"):
        q = Forall if ts.next().kind == "forall" else Exists
        names = [ts.expect("var").text]
        while ts.at("var", ","):
            if ts.at(","):
                ts.next()
            names.append(ts.expect("var").text)
        body = _unary(ts)
        for x in reversed(names):
            body = q(x, body)
        return body
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
    if tok.kind == "var":
        left = _term(ts)
        ts.expect("=")
        return Equal(left, _term(ts))
    if tok.kind == "ident":
        name = ts.next().text
        if ts.at("="):
            ts.next()
            return Equal(Const(name), _term(ts))
        args = []
        if ts.at("("):
            ts.next()
            args.append(_term(ts))
            while ts.at(","):
                ts.next()
                args.append(_term(ts))
            ts.expect(")")
        return PredAtom(name, tuple(args))
    ts.error("expected formula")


def parse_fo_formula(text: str) -> Formula:
    ts = TokenStream(text)
    f = _implication(ts)
    if ts.at("."):
        ts.next()
    if not ts.at("eof"):
        ts.error("unexpected trailing input")
    return f


def parse_fo_theory(text: str) -> list[Formula]:
    """``.``-terminated sentences; ``%`` starts a comment."""
    ts = TokenStream(text)
    out = []
    while not ts.at("eof"):
        out.append(_implication(ts))
        ts.expect(".")
    return out


# ---------------------------------------------------------------------------
# rendering

_IMP, _OR, _AND, _UNARY, _ATOMIC = 1, 2, 3, 4, 5


def _level(f):
    if is_atomic(f) or f == TOP:
        return _ATOMIC
    if is_neg(f) or isinstance(f, Quantified):
        return _UNARY
    return {Implies: _IMP, Or: _OR, And: _AND}[type(f)]


def _wrap(f, min_level):
    text = render_fo(f)
    return f"({text})" if _level(f) < min_level else text


def render_fo(f: Formula) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, PredAtom):
        if not f.args:
            return f.pred
        return f"{f.pred}({','.join(str(t) for t in f.args)})"
    if isinstance(f, Equal):
        return f"{f.left} = {f.right}"
    if isinstance(f, Bottom):
        return "bot"
    if f == TOP:
        return "top"
    if is_neg(f):
        return "not " + _wrap(f.left, _UNARY)
    if isinstance(f, Quantified):
        word = "forall" if isinstance(f, Forall) else "exists"
        return f"{word} {f.var} {_wrap(f.body, _UNARY)}"
    if isinstance(f, And):
        return f"{_wrap(f.left, _AND)} & {_wrap(f.right, _AND + 1)}"
    if isinstance(f, Or):
        return f"{_wrap(f.left, _OR)} | {_wrap(f.right, _OR + 1)}"
    return f"{_wrap(f.left, _IMP + 1)} -> {_wrap(f.right, _IMP)}"
