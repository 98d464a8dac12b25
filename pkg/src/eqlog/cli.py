"""Command-line front end.

Exit codes: 0 when the answer is yes or the command succeeded, 1 when a
decision is negative or a documented semantic refusal occurred (entailment
missing, incoherent program, unsafe formula), 2 on usage, parse or cap errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import equilibrium, forgetting, ht, interpolation
from .errors import EqlogError, IncoherentError, NotEntailed, ParseError, UnsafeError
from .fo import grounding, safety
from .fo.syntax import constants_of, parse_fo_theory, render_fo
from .syntax import (Program, conj, parse_formula, parse_program, parse_theory, render, vocab,
                     vocabulary_of)

YES, NO, ERROR = 0, 1, 2


def _text(source: str) -> str:
    """Contents of ``source`` if it names a file, otherwise ``source`` itself."""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    if source.endswith((".lp", ".txt", ".eq", ".fo")):
        raise FileNotFoundError(f"no such file: {source}")
    return source


def load(source: str):
    """A ``Program`` when the text is in rule syntax, otherwise a ``Theory``."""
    text = _text(source)
    try:
        return parse_program(text)
    except ParseError:
        pass
    try:
        return parse_theory(text)
    except ParseError:
        # a bare formula without the terminating period
        return parse_theory(text.rstrip() + ".")


def load_program(source: str) -> Program:
    loaded = load(source)
    if not isinstance(loaded, Program):
        raise ParseError("expected a program in rule syntax")
    return loaded


def _names(value: str | None) -> list[str]:
    return [x.strip() for x in (value or "").split(",") if x.strip()]


def _model_json(m) -> dict:
    return {"here": sorted(m.here), "there": sorted(m.there)}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def _answer(holds: bool) -> int:
    print("YES" if holds else "NO")
    return YES if holds else NO


# ---------------------------------------------------------------------------
# commands


def cmd_models(args) -> int:
    theory = load(args.file)
    v = vocab(vocabulary_of(theory) + tuple(_names(args.vocab)))
    if args.logic == "ht":
        models = ht.ht_models(theory, v, args.max_atoms)
    else:
        models = equilibrium.equilibrium_models(theory, v, args.max_atoms)
    if args.json:
        print(_dump({"models": [_model_json(m) for m in models]}))
    else:
        for m in models:
            print(m)
    return YES


def cmd_entail(args) -> int:
    query = parse_formula(args.query)
    if args.mode == "as":
        return _answer(equilibrium.entails_as(load_program(args.file), query, args.max_atoms))
    theory = load(args.file)
    if args.mode == "ht":
        witness = ht.ht_countermodel(theory, query, args.max_atoms)
        code = _answer(witness is None)
        if witness is not None:
            print(f"countermodel: {witness}")
        return code
    decide = equilibrium.entails_cw if args.mode == "cw" else equilibrium.entails_ow
    return _answer(decide(theory, query, args.max_atoms))


def cmd_interpolate(args) -> int:
    left = load(args.left)
    right = parse_formula(args.right)
    try:
        if args.mode == "cw":
            result = interpolation.interpolate_cw(left, right, args.max_atoms)
            gamma, difference = result.interpolant, list(result.difference_atoms)
        elif args.mode == "ow":
            gamma, difference = interpolation.interpolate_ow(left, right, args.max_atoms), []
        else:
            gamma = interpolation.ht_interpolant(conj(left), right, args.max_atoms)
            difference = []
    except NotEntailed:
        print("entailment does not hold", file=sys.stderr)
        return NO
    if args.json:
        print(_dump({"interpolant": render(gamma), "difference_atoms": difference,
                     "verified": True}))
    else:
        print(f"interpolant: {render(gamma)}")
        if args.mode == "cw":
            print(f"difference_atoms: {','.join(difference)}")
        print("verified: true")
    return YES


def cmd_forget(args) -> int:
    program = load_program(args.file)
    print(render(forgetting.forget_set(program, _names(args.atoms), args.max_atoms)))
    return YES


def cmd_uniform(args) -> int:
    program = load_program(args.file)
    print(render(forgetting.uniform_interpolant_asp(program, _names(args.keep),
                                                    max_atoms=args.max_atoms)))
    return YES


def cmd_safety(args) -> int:
    formulas = parse_fo_theory(_text(args.file))
    reports = [safety.is_safe(f, auto_prenex=args.auto_prenex) for f in formulas]
    if args.json:
        print(_dump({"formulas": [{"text": render_fo(f), "verdict": r.verdict,
                                   "nss": sorted(r.nss_vars)}
                                  for f, r in zip(formulas, reports)]}))
    else:
        for f, r in zip(formulas, reports):
            print(f"{render_fo(f)}: {safety.describe(r)}")
            for occ in r.offending_occurrences:
                print(f"  not weakly restricted: {occ}")
    return YES if all(r.safe for r in reports) else NO


def cmd_ground(args) -> int:
    formulas = parse_fo_theory(_text(args.file))
    constants = _names(args.constants) or sorted(constants_of(formulas))
    print(render(grounding.ground(formulas, constants)))
    return YES


def cmd_equiv(args) -> int:
    first, second = load(args.file1), load(args.file2)
    if args.mode == "ht":
        witness = ht.ht_equivalence_witness(first, second, args.max_atoms)
        code = _answer(witness is None)
        if witness is not None:
            print(f"witness: {witness}")
        return code
    sig = _names(args.sig)
    if args.mode == "projective":
        witness = interpolation.projective_witness(first, second, sig, args.max_atoms)
        code = _answer(witness is None)
        if witness is not None:
            print(f"witness: {{{', '.join(sorted(witness))}}}")
        return code
    result = interpolation.inseparable(first, second, sig, max_atoms=args.max_atoms)
    code = _answer(result.inseparable)
    if result.witness is not None:
        print(f"witness: {render(result.witness)}")
    return code


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-atoms", type=int, default=None, metavar="N",
                        help="enumeration cap (overrides EQLOG_MAX_ATOMS)")

    parser = argparse.ArgumentParser(prog="eqlog",
                                     description="Equilibrium logic and answer set toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("models", parents=[common], help="list HT or equilibrium models")
    p.add_argument("file")
    p.add_argument("--logic", choices=("ht", "eq"), default="eq")
    p.add_argument("--vocab", help="extra atoms, comma separated")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_models)

    p = sub.add_parser("entail", parents=[common], help="decide an entailment")
    p.add_argument("file")
    p.add_argument("--mode", choices=("cw", "ow", "ht", "as"), default="cw")
    p.add_argument("--query", required=True)
    p.set_defaults(func=cmd_entail)

    p = sub.add_parser("interpolate", parents=[common], help="compute a verified interpolant")
    p.add_argument("--mode", choices=("cw", "ow", "ht"), default="cw")
    p.add_argument("--left", required=True, help="theory file or inline text")
    p.add_argument("--right", required=True, help="query formula")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("forget", parents=[common], help="forget atoms from a program")
    p.add_argument("file")
    p.add_argument("--atoms", required=True)
    p.set_defaults(func=cmd_forget)

    p = sub.add_parser("uniform", parents=[common], help="uniform interpolant of a program")
    p.add_argument("file")
    p.add_argument("--keep", required=True)
    p.set_defaults(func=cmd_uniform)

    p = sub.add_parser("safety", parents=[common], help="safety verdicts for FO sentences")
    p.add_argument("file")
    p.add_argument("--auto-prenex", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_safety)

    p = sub.add_parser("ground", parents=[common], help="ground FO sentences")
    p.add_argument("file")
    p.add_argument("--constants", help="comma separated constants (default: those named)")
    p.set_defaults(func=cmd_ground)

    p = sub.add_parser("equiv", parents=[common], help="compare two theories")
    p.add_argument("--mode", choices=("ht", "projective", "inseparable"), default="ht")
    p.add_argument("--sig", help="comma separated signature")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_equiv)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "equiv" and args.mode != "ht" and not args.sig:
        print("eqlog: --sig is required for this mode", file=sys.stderr)
        return ERROR
    try:
        return args.func(args)
    except (IncoherentError, UnsafeError) as exc:
        print(f"eqlog: {exc}", file=sys.stderr)
        return NO
    except (EqlogError, OSError) as exc:
        print(f"eqlog: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
