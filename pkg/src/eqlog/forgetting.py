"""Semantic forgetting for ground disjunctive programs.

``forget_atom`` computes the answer sets, deletes the forgotten atom from each,
keeps the subset-minimal results A_1..A_m and emits, for every A_i, the rules
``a' :- not b1, ..., not bk.`` for each a' in A_i, where b1..bk are the
remaining atoms of the program that are not in A_i.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterable, Sequence

from .equilibrium import answer_sets, entails_cw, is_coherent, set_key
from .errors import IncoherentError, VerificationError
from .ht import HTInterpretation, World, ht_satisfies
from .syntax import Atom, Formula, Program, Rule, as_theory, conj, neg, vocab, vocabulary_of


def _require_coherent(program: Program, max_atoms):
    if not is_coherent(as_theory(program), max_atoms):
        raise IncoherentError("program incoherent")


def minimal_sets(sets: Iterable[frozenset]) -> list[frozenset]:
    unique = set(sets)
    return sorted((s for s in unique if not any(o < s for o in unique)), key=set_key)


def program_for_answer_sets(sets: Sequence[frozenset], v: Iterable[str]) -> Program:
    """Program whose answer sets are exactly the given antichain over ``v``."""
    v = vocab(v)
    rules = []
    for a_i in sets:
        outside = tuple(a for a in v if a not in a_i)
        rules.extend(Rule((a,), (), outside) for a in sorted(a_i))
    return Program(tuple(sorted(set(rules), key=_rule_key)))


def _rule_key(r: Rule):
    return (r.heads, r.pos_body, r.neg_body)


def forget_atom(program: Program, atom: str, max_atoms: int | None = None) -> Program:
    _require_coherent(program, max_atoms)
    v = vocabulary_of(program)
    if atom not in v:
        return program
    projected = [s - {atom} for s in answer_sets(program, max_atoms)]
    remaining = tuple(a for a in v if a != atom)
    return program_for_answer_sets(minimal_sets(projected), remaining)


def forget_set(program: Program, atoms: Sequence[str], max_atoms: int | None = None) -> Program:
    _require_coherent(program, max_atoms)
    for a in atoms:
        program = forget_atom(program, a, max_atoms)
    return program


def holds_in_answer_sets(program: Program, q: Formula, max_atoms: int | None = None) -> bool:
    """Closed-world entailment that reads the empty program by its one answer set.

    ``entails_cw`` falls back to HT consequence for an empty theory, but the
    empty program produced by forgetting stands for the answer set {} and must
    keep the negative literals of the original program.
    """
    if len(program):
        return entails_cw(program, q, max_atoms)
    empty = HTInterpretation.total_model((), vocabulary_of(q))
    return ht_satisfies(empty, World.HERE, q)


def literal_queries(sig: Iterable[str]):
    """Every conjunction of literals over ``sig`` (each atom positive, negative or absent)."""
    sig = vocab(sig)
    for signs in product((None, True, False), repeat=len(sig)):
        parts = [Atom(a) if s else neg(Atom(a)) for a, s in zip(sig, signs) if s is not None]
        yield conj(parts)


def uniform_interpolant_asp(program: Program, keep: Iterable[str], verify: bool = True,
                            max_atoms: int | None = None) -> Program:
    """Forget every atom outside ``keep`` (and every kept atom the program lacks).

    With ``verify`` the result is checked to be cw-entailed by the program and
    to preserve every entailed conjunction of literals over ``keep``.
    """
    _require_coherent(program, max_atoms)
    keep = vocab(keep)
    v = vocabulary_of(program)
    forget = [a for a in v if a not in set(keep)] + [a for a in keep if a not in set(v)]
    result = forget_set(program, forget, max_atoms)
    if verify:
        if not entails_cw(program, conj(as_theory(result)), max_atoms):
            raise VerificationError("program does not entail its uniform interpolant")
        for q in literal_queries(keep):
            if entails_cw(program, q, max_atoms) and not holds_in_answer_sets(result, q, max_atoms):
                raise VerificationError(f"query {q} lost by forgetting")
    return result


def forget_orders_agree(program: Program, atoms: Sequence[str], max_atoms: int | None = None) -> bool:
    """Whether every ordering of ``atoms`` yields the same answer sets."""
    outcomes = {tuple(answer_sets(forget_set(program, list(order), max_atoms), max_atoms))
                for order in permutations(atoms)}
    return len(outcomes) == 1
