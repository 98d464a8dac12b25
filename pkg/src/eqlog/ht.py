"""Propositional here-and-there semantics.

An interpretation over a vocabulary V is a pair <H, T> with H <= T <= V.
Besides the clause-by-clause satisfaction relation ``ht_satisfies``, model
enumeration uses the equivalent three-valued reading of HT: an atom takes
value 2 if it is in H, 1 if it is only in T and 0 otherwise; conjunction is
min, disjunction is max and ``f -> g`` is 2 when ``f <= g`` and ``g``
otherwise.  A formula holds at both worlds exactly when its value is 2.
Both routes are cross-checked in the test suite.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded, VocabularyError
from .syntax import (And, Atom, Bottom, Formula, Implies, Or, Theory, Vocabulary,
                     as_theory, vocab, vocabulary_of)

DEFAULT_MAX_ATOMS = 14


def max_atoms_default() -> int:
    """Enumeration cap: ``EQLOG_MAX_ATOMS`` if set, else 14."""
    env = os.environ.get("EQLOG_MAX_ATOMS")
    return int(env) if env else DEFAULT_MAX_ATOMS


def check_cap(v: Sequence[str], max_atoms: int | None = None):
    cap = max_atoms_default() if max_atoms is None else max_atoms
    if len(v) > cap:
        raise CapExceeded(len(v), cap)


class World(enum.Enum):
    HERE = "h"
    THERE = "t"


@dataclass(frozen=True)
class HTInterpretation:
    here: frozenset
    there: frozenset
    vocab: Vocabulary

    def __post_init__(self):
        object.__setattr__(self, "here", frozenset(self.here))
        object.__setattr__(self, "there", frozenset(self.there))
        object.__setattr__(self, "vocab", vocab(self.vocab))
        if not self.here <= self.there:
            raise VocabularyError("here-set must be a subset of the there-set")
        if not self.there <= set(self.vocab):
            raise VocabularyError("there-set must be a subset of the vocabulary")

    @classmethod
    def total_model(cls, atoms: Iterable[str], v: Iterable[str]) -> "HTInterpretation":
        atoms = frozenset(atoms)
        return cls(atoms, atoms, tuple(v))

    @property
    def total(self) -> bool:
        return self.here == self.there

    def restrict(self, v: Iterable[str]) -> "HTInterpretation":
        v = vocab(v)
        keep = set(v)
        return HTInterpretation(self.here & keep, self.there & keep, v)

    def value(self, atom: str) -> int:
        if atom in self.here:
            return 2
        return 1 if atom in self.there else 0

    def __str__(self):
        return f"here={_fmt(self.here)} there={_fmt(self.there)}"


def _fmt(atoms) -> str:
    return "{" + ",".join(sorted(atoms)) + "}"


def ht_satisfies(m: HTInterpretation, w: World, f: Formula) -> bool:
    """Satisfaction of ``f`` at world ``w`` of ``m`` by the recursive clauses."""
    if isinstance(f, Atom):
        if f.name not in m.vocab:
            raise VocabularyError(f"atom {f.name!r} is not in the interpretation's vocabulary")
        return f.name in (m.here if w is World.HERE else m.there)
    if isinstance(f, Bottom):
        return False
    if isinstance(f, And):
        return ht_satisfies(m, w, f.left) and ht_satisfies(m, w, f.right)
    if isinstance(f, Or):
        return ht_satisfies(m, w, f.left) or ht_satisfies(m, w, f.right)
    if isinstance(f, Implies):
        at_there = (not ht_satisfies(m, World.THERE, f.left)) or ht_satisfies(m, World.THERE, f.right)
        if w is World.THERE:
            return at_there
        return at_there and ((not ht_satisfies(m, World.HERE, f.left))
                             or ht_satisfies(m, World.HERE, f.right))
    raise TypeError(f"not a formula: {f!r}")


def is_model(m: HTInterpretation, theory) -> bool:
    """``m`` satisfies every formula of ``theory`` at both worlds."""
    return all(ht_satisfies(m, World.HERE, f) and ht_satisfies(m, World.THERE, f)
               for f in as_theory(theory))


# ---------------------------------------------------------------------------
# vectorized enumeration


def _set_rank(n: int) -> np.ndarray:
    """Rank of each bitmask under the order (size, sorted index tuple)."""
    masks = sorted(range(1 << n),
                   key=lambda m: (bin(m).count("1"), [i for i in range(n) if m >> i & 1]))
    rank = np.empty(1 << n, dtype=np.int64)
    rank[masks] = np.arange(1 << n)
    return rank


@dataclass(frozen=True)
class Table:
    """All 3^n interpretations over n atoms, in the canonical model order."""
    values: np.ndarray  # (3^n, n) int8
    here: np.ndarray  # bitmask per row
    there: np.ndarray

    def __len__(self):
        return self.values.shape[0]


@lru_cache(maxsize=6)
def table(n: int) -> Table:
    idx = np.arange(3 ** n, dtype=np.int64)
    vals = np.empty((3 ** n, n), dtype=np.int8)
    for i in range(n):
        vals[:, i] = (idx // 3 ** i) % 3
    weights = (1 << np.arange(n, dtype=np.int64))
    here = ((vals == 2).astype(np.int64) * weights).sum(axis=1)
    there = ((vals >= 1).astype(np.int64) * weights).sum(axis=1)
    rank = _set_rank(n)
    order = np.argsort(rank[here] * (1 << n) + rank[there], kind="stable")
    vals, here, there = vals[order], here[order], there[order]
    for arr in (vals, here, there):
        arr.setflags(write=False)
    return Table(vals, here, there)


def evaluate(f: Formula, values: np.ndarray, index: dict) -> np.ndarray:
    """Three-valued HT value of ``f`` on each row of ``values``."""
    if isinstance(f, Atom):
        try:
            return values[:, index[f.name]]
        except KeyError:
            raise VocabularyError(f"atom {f.name!r} is not in the vocabulary") from None
    if isinstance(f, Bottom):
        return np.zeros(values.shape[0], dtype=np.int8)
    left = evaluate(f.left, values, index)
    right = evaluate(f.right, values, index)
    if isinstance(f, And):
        return np.minimum(left, right)
    if isinstance(f, Or):
        return np.maximum(left, right)
    return np.where(left <= right, np.int8(2), right).astype(np.int8)


def theory_value(theory: Theory, values: np.ndarray, index: dict) -> np.ndarray:
    out = np.full(values.shape[0], 2, dtype=np.int8)
    for f in theory:
        out = np.minimum(out, evaluate(f, values, index))
    return out


def rows_for(models: Sequence[HTInterpretation], v: Vocabulary) -> np.ndarray:
    vals = np.zeros((len(models), len(v)), dtype=np.int8)
    for r, m in enumerate(models):
        for i, a in enumerate(v):
            vals[r, i] = m.value(a)
    return vals


def interpretation_from_masks(here: int, there: int, v: Vocabulary) -> HTInterpretation:
    return HTInterpretation(frozenset(a for i, a in enumerate(v) if here >> i & 1),
                            frozenset(a for i, a in enumerate(v) if there >> i & 1), v)


def _prepare(theory, v, max_atoms):
    theory = as_theory(theory)
    v = vocab(v)
    missing = set(vocabulary_of(theory)) - set(v)
    if missing:
        raise VocabularyError(f"atoms {sorted(missing)} are not in the vocabulary")
    check_cap(v, max_atoms)
    return theory, v


def model_mask(theory, v, max_atoms=None):
    """Boolean row mask of the models of ``theory`` over ``table(len(v))``."""
    theory, v = _prepare(theory, v, max_atoms)
    tab = table(len(v))
    index = {a: i for i, a in enumerate(v)}
    return tab, theory_value(theory, tab.values, index) == 2


def ht_models(theory, v: Iterable[str], max_atoms: int | None = None) -> list[HTInterpretation]:
    """All HT models of ``theory`` over ``v`` in canonical order."""
    v = vocab(v)
    tab, mask = model_mask(theory, v, max_atoms)
    rows = np.flatnonzero(mask)
    return [interpretation_from_masks(int(tab.here[r]), int(tab.there[r]), v) for r in rows]


def ht_countermodel(theory, f: Formula, max_atoms: int | None = None) -> HTInterpretation | None:
    """First model of ``theory`` over the joint vocabulary falsifying ``f``."""
    theory = as_theory(theory)
    v = vocab(vocabulary_of(theory) + vocabulary_of(f))
    tab, mask = model_mask(theory, v, max_atoms)
    index = {a: i for i, a in enumerate(v)}
    bad = np.flatnonzero(mask & (evaluate(f, tab.values, index) != 2))
    if bad.size == 0:
        return None
    r = bad[0]
    return interpretation_from_masks(int(tab.here[r]), int(tab.there[r]), v)


def ht_entails(theory, f: Formula, max_atoms: int | None = None) -> bool:
    return ht_countermodel(theory, f, max_atoms) is None


def ht_valid(f: Formula, max_atoms: int | None = None) -> bool:
    return ht_entails(Theory(), f, max_atoms)


def ht_equivalence_witness(theory1, theory2, max_atoms: int | None = None):
    """First interpretation (canonical order) that is a model of exactly one theory."""
    t1, t2 = as_theory(theory1), as_theory(theory2)
    v = vocab(vocabulary_of(t1) + vocabulary_of(t2))
    tab, m1 = model_mask(t1, v, max_atoms)
    _, m2 = model_mask(t2, v, max_atoms)
    diff = np.flatnonzero(m1 != m2)
    if diff.size == 0:
        return None
    r = diff[0]
    return interpretation_from_masks(int(tab.here[r]), int(tab.there[r]), v)


def ht_equivalent(theory1, theory2, max_atoms: int | None = None) -> bool:
    return ht_equivalence_witness(theory1, theory2, max_atoms) is None
