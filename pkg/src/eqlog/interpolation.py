"""Interpolants for HT and for equilibrium entailment; inseparability of theories."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .definability import axiomatize_model_set, defining_formula, literal_definition
from .equilibrium import (entails_cw, entails_ow, equilibrium_models, is_coherent, set_key)
from .errors import NotEntailed, VerificationError, VocabularyError
from .ht import (check_cap, evaluate, ht_entails, interpretation_from_masks, model_mask, table)
from .syntax import (BOT, And, Atom, Formula, Implies, Or, Theory, as_theory, conj, neg,
                     vocab, vocabulary_of)


@dataclass(frozen=True)
class CwInterpolationResult:
    interpolant: Formula
    difference_atoms: tuple = ()
    verified: bool = False


def _project_masks(here, there, src: tuple, dst: tuple):
    pos = {a: i for i, a in enumerate(src)}
    ph = np.zeros_like(here)
    pt = np.zeros_like(there)
    for j, a in enumerate(dst):
        if a in pos:
            i = pos[a]
            ph |= ((here >> i) & 1) << j
            pt |= ((there >> i) & 1) << j
    return ph, pt


def uniform_interpolant_ht(f: Formula, v: Iterable[str], max_atoms: int | None = None) -> Formula:
    """Strongest HT consequence of ``f`` in the vocabulary ``v``.

    Projects the HT models of ``f`` onto ``v`` and axiomatizes the projection,
    preferring a plain conjunction of literals when one defines it, and ``f``
    itself when it already lives inside ``v``.
    """
    v = vocab(v)
    full = vocab(vocabulary_of(f) + v)
    tab, mask = model_mask([f], full, max_atoms)
    rows = np.flatnonzero(mask)
    ph, pt = _project_masks(tab.here[rows], tab.there[rows], full, v)
    pairs = sorted(set(zip(ph.tolist(), pt.tolist())))
    models = [interpretation_from_masks(h, t, v) for h, t in pairs]
    shortcut = literal_definition(models, v)
    if shortcut is not None:
        return shortcut
    if set(vocabulary_of(f)) <= set(v):
        return f
    return axiomatize_model_set(models, v)


def ht_interpolant(f: Formula, g: Formula, max_atoms: int | None = None) -> Formula:
    """HT interpolant for ``f |= g`` in the shared vocabulary, verified before return."""
    if not ht_entails([f], g, max_atoms):
        raise NotEntailed("not HT-entailed")
    shared = set(vocabulary_of(f)) & set(vocabulary_of(g))
    gamma = uniform_interpolant_ht(f, shared, max_atoms)
    if not set(vocabulary_of(gamma)) <= shared:
        raise VerificationError("interpolant leaves the shared vocabulary")
    if not (ht_entails([f], gamma, max_atoms) and ht_entails([gamma], g, max_atoms)):
        raise VerificationError("interpolant fails an entailment check")
    return gamma


def _equilibrium_definition(theory: Theory, v, max_atoms) -> Formula:
    """Formula in the theory's vocabulary defining its equilibrium models."""
    base = vocabulary_of(theory)
    models = [m.restrict(base) for m in equilibrium_models(theory, v, max_atoms)]
    return defining_formula(models, base)


def interpolate_cw(alpha, beta: Formula, max_atoms: int | None = None) -> CwInterpolationResult:
    """Interpolant gamma for closed-world entailment ``alpha |~cw beta``.

    gamma is in the shared vocabulary, is cw-entailed by ``alpha`` and, together
    with the negations of the query atoms foreign to ``alpha``, HT-entails
    ``beta``.
    """
    alpha = as_theory(alpha)
    if not entails_cw(alpha, beta, max_atoms):
        raise NotEntailed("not cw-entailed")
    base = vocabulary_of(alpha)
    difference = tuple(a for a in vocabulary_of(beta) if a not in set(base))
    negated = [neg(Atom(b)) for b in difference]
    if len(alpha) and is_coherent(alpha, max_atoms):
        definition = _equilibrium_definition(alpha, base + difference, max_atoms)
        target = Implies(conj(negated), beta) if negated else beta
        gamma = ht_interpolant(definition, target, max_atoms)
    else:
        # HT fallback: gamma alone already HT-entails beta
        gamma = ht_interpolant(conj(alpha), beta, max_atoms)
    shared = set(base) & set(vocabulary_of(beta))
    checks = (
        set(vocabulary_of(gamma)) <= shared,
        entails_cw(alpha, gamma, max_atoms),
        ht_entails([gamma] + negated, beta, max_atoms),
        entails_cw([gamma], beta, max_atoms),
    )
    if not all(checks):
        raise VerificationError(f"cw interpolant failed guarantees {checks}")
    return CwInterpolationResult(gamma, difference, True)


def interpolate_ow(alpha, beta: Formula, max_atoms: int | None = None) -> Formula:
    """Interpolant gamma for open-world entailment: ``alpha |~ow gamma`` and ``gamma |= beta``."""
    alpha = as_theory(alpha)
    if not entails_ow(alpha, beta, max_atoms):
        raise NotEntailed("not ow-entailed")
    base = vocabulary_of(alpha)
    if len(alpha) and is_coherent(alpha, max_atoms):
        gamma = ht_interpolant(_equilibrium_definition(alpha, base, max_atoms), beta, max_atoms)
    else:
        gamma = ht_interpolant(conj(alpha), beta, max_atoms)
    shared = set(base) & set(vocabulary_of(beta))
    checks = (
        set(vocabulary_of(gamma)) <= shared,
        entails_ow(alpha, gamma, max_atoms),
        ht_entails([gamma], beta, max_atoms),
    )
    if not all(checks):
        raise VerificationError(f"ow interpolant failed guarantees {checks}")
    return gamma


# ---------------------------------------------------------------------------
# projective equivalence and inseparability


def em_projection(theory, sig: Iterable[str], max_atoms: int | None = None) -> set[frozenset]:
    """There-sets of the equilibrium models restricted to ``sig``."""
    theory = as_theory(theory)
    keep = set(sig)
    return {m.there & keep for m in equilibrium_models(theory, None, max_atoms)}


def _check_common(t1, t2, sig):
    common = set(vocabulary_of(t1)) & set(vocabulary_of(t2))
    if not set(sig) <= common:
        raise VocabularyError(f"{sorted(set(sig) - common)} not in the common vocabulary")


def projective_witness(theory1, theory2, sig: Iterable[str],
                       max_atoms: int | None = None) -> frozenset | None:
    """First projected answer set (canonical order) that only one theory has."""
    t1, t2 = as_theory(theory1), as_theory(theory2)
    sig = vocab(sig)
    _check_common(t1, t2, sig)
    diff = em_projection(t1, sig, max_atoms) ^ em_projection(t2, sig, max_atoms)
    return min(diff, key=set_key) if diff else None


def projectively_equivalent(theory1, theory2, sig: Iterable[str],
                            max_atoms: int | None = None) -> bool:
    return projective_witness(theory1, theory2, sig, max_atoms) is None


@dataclass(frozen=True)
class InseparabilityResult:
    inseparable: bool
    bounded: bool = False
    witness: Formula | None = field(default=None, compare=False)

    def __bool__(self):
        return self.inseparable


def state_description(atoms: frozenset, sig) -> Formula:
    return conj([Atom(a) for a in sig if a in atoms] + [neg(Atom(a)) for a in sig if a not in atoms])


def query_classes(sig: Iterable[str], max_depth: int):
    """One representative per HT-equivalence class of formulas over ``sig`` up to ``max_depth``.

    Returns ``(reps, values)``: representatives of least depth in enumeration
    order and their value vectors over ``table(len(sig))``.
    """
    sig = vocab(sig)
    tab = table(len(sig))
    index = {a: i for i, a in enumerate(sig)}
    reps: list[Formula] = []
    seen: dict[bytes, int] = {}
    vectors: list[np.ndarray] = []

    def add(f, vec):
        key = vec.tobytes()
        if key not in seen:
            seen[key] = len(reps)
            reps.append(f)
            vectors.append(vec)

    for f in [Atom(a) for a in sig] + [BOT]:
        add(f, evaluate(f, tab.values, index))
    frontier_start = 0
    for _ in range(max_depth):
        count = len(reps)
        for i in range(count):
            for j in range(count):
                if i < frontier_start and j < frontier_start:
                    continue
                a, b = vectors[i], vectors[j]
                add(And(reps[i], reps[j]), np.minimum(a, b))
                add(Or(reps[i], reps[j]), np.maximum(a, b))
                add(Implies(reps[i], reps[j]), np.where(a <= b, np.int8(2), b).astype(np.int8))
        frontier_start = count
    return reps, np.array(vectors, dtype=np.int8)


def _consequence_rows(theory: Theory, sig, max_atoms) -> np.ndarray:
    """Rows of ``table(len(sig))`` whose satisfaction decides ``theory |~cw q`` for q over ``sig``."""
    v = vocab(vocabulary_of(theory) + tuple(sig))
    check_cap(v, max_atoms)
    if len(theory) and is_coherent(theory, max_atoms):
        models = equilibrium_models(theory, v, max_atoms)
        pairs = {(m.here & set(sig), m.there & set(sig)) for m in models}
    else:
        tab, mask = model_mask(theory, v, max_atoms)
        rows = np.flatnonzero(mask)
        ph, pt = _project_masks(tab.here[rows], tab.there[rows], v, sig)
        lookup = set(zip(ph.tolist(), pt.tolist()))
        small = table(len(sig))
        return np.array([r for r, hp in enumerate(zip(small.here.tolist(), small.there.tolist()))
                         if hp in lookup], dtype=np.int64)
    small = table(len(sig))
    wanted = {(sum(1 << i for i, a in enumerate(sig) if a in h),
               sum(1 << i for i, a in enumerate(sig) if a in t)) for h, t in pairs}
    return np.array([r for r, hp in enumerate(zip(small.here.tolist(), small.there.tolist()))
                     if hp in wanted], dtype=np.int64)


def inseparability_sweep(theory1, theory2, sig: Iterable[str], max_depth: int = 2,
                         max_atoms: int | None = None) -> Formula | None:
    """First query over ``sig`` of depth at most ``max_depth`` separating the theories."""
    t1, t2 = as_theory(theory1), as_theory(theory2)
    sig = vocab(sig)
    reps, vectors = query_classes(sig, max_depth)
    rows1 = _consequence_rows(t1, sig, max_atoms)
    rows2 = _consequence_rows(t2, sig, max_atoms)
    holds1 = np.all(vectors[:, rows1] == 2, axis=1)
    holds2 = np.all(vectors[:, rows2] == 2, axis=1)
    diff = np.flatnonzero(holds1 != holds2)
    return reps[diff[0]] if diff.size else None


def inseparable(theory1, theory2, sig: Iterable[str], max_depth: int = 2,
                max_atoms: int | None = None) -> InseparabilityResult:
    """Whether both theories cw-entail the same formulas over ``sig``.

    For coherent theories with ``sig`` inside their common vocabulary this is
    decided exactly by comparing projected answer sets.  Otherwise queries up
    to ``max_depth`` are swept and the result is marked ``bounded``.
    """
    t1, t2 = as_theory(theory1), as_theory(theory2)
    sig = vocab(sig)
    common = set(vocabulary_of(t1)) & set(vocabulary_of(t2))
    exact = (set(sig) <= common and len(t1) and len(t2)
             and is_coherent(t1, max_atoms) and is_coherent(t2, max_atoms))
    if exact:
        diff = em_projection(t1, sig, max_atoms) ^ em_projection(t2, sig, max_atoms)
        if not diff:
            return InseparabilityResult(True)
        # a projection only one side has is refuted by its negated state description
        return InseparabilityResult(False, witness=neg(state_description(min(diff, key=set_key), sig)))
    witness = inseparability_sweep(t1, t2, sig, max_depth, max_atoms)
    return InseparabilityResult(witness is None, bounded=True, witness=witness)
