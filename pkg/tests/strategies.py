"""Hypothesis strategies and small random generators shared by the tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from eqlog.syntax import BOT, And, Atom, Implies, Or, Program, Rule, Theory

ATOMS = ("a", "b", "c", "d", "e", "f")


def formulas(atoms=ATOMS[:3], max_leaves=8):
    leaves = st.sampled_from([Atom(a) for a in atoms] + [BOT])
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.builds(And, sub, sub), st.builds(Or, sub, sub), st.builds(Implies, sub, sub)),
        max_leaves=max_leaves,
    )


def rules(atoms=ATOMS[:3]):
    pool = list(atoms)
    subsets = st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)).map(tuple)
    return st.builds(Rule, subsets, subsets, subsets)


def programs(atoms=ATOMS[:3], max_rules=3):
    return st.lists(rules(atoms), min_size=1, max_size=max_rules).map(lambda rs: Program(tuple(rs)))


def theories(atoms=ATOMS[:3], max_size=3, max_leaves=6):
    return st.lists(formulas(atoms, max_leaves), min_size=1, max_size=max_size).map(
        lambda fs: Theory(tuple(fs)))


# -- plain-random generators for bulk acceptance sweeps ------------------------


def random_formula(rng: random.Random, atoms, depth: int):
    if depth == 0 or rng.random() < 0.25:
        pick = rng.randrange(len(atoms) + 1)
        return BOT if pick == len(atoms) else Atom(atoms[pick])
    op = rng.choice((And, Or, Implies, Implies))
    return op(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1))


def random_theory(rng: random.Random, atoms, size: int, depth: int = 3) -> Theory:
    return Theory(tuple(random_formula(rng, atoms, depth) for _ in range(size)))


def random_rule(rng: random.Random, atoms, max_part: int = 2) -> Rule:
    def part():
        return tuple(rng.sample(atoms, rng.randint(0, min(max_part, len(atoms)))))
    return Rule(part(), part(), part())


def random_program(rng: random.Random, atoms, n_rules: int) -> Program:
    return Program(tuple(random_rule(rng, atoms) for _ in range(n_rules)))
