"""Formulas that define given sets of HT interpretations."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import NotPersistenceClosed, NotTotalError, VerificationError, VocabularyError
from .ht import HTInterpretation, check_cap, model_mask, table
from .syntax import BOT, Atom, Formula, Implies, conj, disj, neg, simplify, vocab


def _check_vocab(models, v):
    for m in models:
        if m.vocab != v:
            raise VocabularyError(f"interpretation over {list(m.vocab)} given for vocabulary {list(v)}")


def _masks(m: HTInterpretation, v) -> tuple[int, int]:
    here = sum(1 << i for i, a in enumerate(v) if a in m.here)
    there = sum(1 << i for i, a in enumerate(v) if a in m.there)
    return here, there


def models_of(f: Formula, v) -> set[tuple[int, int]]:
    """(here, there) bitmask pairs of the HT models of ``f`` over ``v``."""
    tab, mask = model_mask([f], v, max_atoms=len(v))
    rows = np.flatnonzero(mask)
    return set(zip(tab.here[rows].tolist(), tab.there[rows].tolist()))


def defining_formula(models: Iterable[HTInterpretation], v: Iterable[str],
                     verify: bool | None = None) -> Formula:
    """Disjunction of one state description per total model.

    Each model T contributes ``(conjunction of T) & not (disjunction of V \\ T)``;
    the result's HT models over ``v`` are exactly the given models.
    """
    v = vocab(v)
    models = list(models)
    _check_vocab(models, v)
    for m in models:
        if not m.total:
            raise NotTotalError(f"defining_formula needs total models, got {m}")
    deltas = []
    for m in models:
        present = conj(Atom(a) for a in v if a in m.there)
        absent = neg(disj(Atom(a) for a in v if a not in m.there))
        deltas.append(conj([present, absent]))
    out = simplify(disj(deltas))
    if __debug__ if verify is None else verify:
        if models_of(out, v) != {_masks(m, v) for m in models}:
            raise VerificationError("defining formula does not define the given models")
    return out


def is_persistence_closed(models: Iterable[HTInterpretation], v: Iterable[str]) -> bool:
    v = vocab(v)
    models = list(models)
    _check_vocab(models, v)
    present = {(m.here, m.there) for m in models}
    return all((m.there, m.there) in present for m in models)


def exclude(here: frozenset, there: frozenset, v) -> Formula:
    """A formula whose models over ``v`` are all interpretations except ``<here, there>``.

    For a total interpretation the formula rejects every interpretation with
    that there-set; a persistence-closed set lacking <T,T> has no <H,T> either.
    """
    absent = [neg(Atom(a)) for a in v if a not in there]
    if here == there:
        return neg(conj([Atom(a) for a in v if a in there] + absent))
    gap = [a for a in v if a in there and a not in here]
    antecedent = conj([Atom(a) for a in v if a in here] + [neg(neg(Atom(a))) for a in gap] + absent)
    return Implies(antecedent, disj(Atom(a) for a in gap))


def axiomatize_model_set(models: Iterable[HTInterpretation], v: Iterable[str]) -> Formula:
    """Formula whose HT models over ``v`` are exactly ``models``.

    Conjoins one ``exclude`` clause per interpretation outside the set.  The
    result is checked by enumeration before it is returned.
    """
    v = vocab(v)
    check_cap(v)
    models = list(models)
    if not is_persistence_closed(models, v):
        raise NotPersistenceClosed("model set is not closed under <H,T> -> <T,T>")
    wanted = {_masks(m, v) for m in models}
    if not wanted:
        return BOT
    tab = table(len(v))
    clauses = []
    for here, there in zip(tab.here.tolist(), tab.there.tolist()):
        if (here, there) in wanted:
            continue
        clauses.append(exclude(_unmask(here, v), _unmask(there, v), v))
    out = simplify(conj(clauses))
    if models_of(out, v) != wanted:
        raise VerificationError("axiomatization does not define the requested model set")
    return out


def _unmask(mask: int, v) -> frozenset:
    return frozenset(a for i, a in enumerate(v) if mask >> i & 1)


def literal_definition(models: Iterable[HTInterpretation], v: Iterable[str]) -> Formula | None:
    """Conjunction of literals defining ``models`` over ``v``, if one exists.

    Candidates are the atoms true at the here-world of every model and the
    negations of atoms absent from every there-set; the candidate is returned
    only when its models over ``v`` are exactly ``models``.
    """
    v = vocab(v)
    models = list(models)
    if not models:
        return None
    _check_vocab(models, v)
    always = [Atom(a) for a in v if all(a in m.here for m in models)]
    never = [neg(Atom(a)) for a in v if all(a not in m.there for m in models)]
    candidate = conj(always + never)
    if models_of(candidate, v) == {_masks(m, v) for m in models}:
        return candidate
    return None
