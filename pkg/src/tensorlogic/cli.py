"""Command-line interface.

Exit codes: 0 provable / valid / all diagrams hold, 1 not provable / invalid,
2 unknown (search or cap exhausted), 3 input error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import category, monoid, theory as theory_mod
from .decision import Decision, NotProvableError, bounded_search, decide, synthesize_proof
from .kernel import Mode, ProofError, check, cut_paths, parse_proof, render_proof
from .terms import UNIT, Atom, ParseError, parse_inference, render_inference
from .transforms import canonicalize, eliminate_cuts, proofs_equivalent

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # input errors exit 3, not argparse's default 2
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _mode(args) -> Mode:
    return Mode.T if args.mode == "t" else Mode.TPRIME


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(text)


def _load_theory(args):
    if getattr(args, "theory", None):
        return theory_mod.load_theory(args.theory)
    return None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_check(args) -> int:
    proof = parse_proof(_read(args.proof))
    try:
        conclusion = check(proof, _mode(args), _load_theory(args))
    except ProofError as exc:
        _emit(args, {"valid": False, "error": str(exc)}, f"invalid: {exc}")
        return EXIT_NO
    _emit(
        args,
        {"valid": True, "conclusion": render_inference(conclusion)},
        f"valid: {render_inference(conclusion)}",
    )
    return EXIT_YES


def cmd_decide(args) -> int:
    inference = parse_inference(args.inference)
    verdict = decide(inference, _mode(args))
    _emit(args, {"verdict": verdict.value}, verdict.value)
    return EXIT_YES if verdict is Decision.PROVABLE else EXIT_NO


def cmd_prove(args) -> int:
    inference = parse_inference(args.inference)
    try:
        proof = synthesize_proof(inference, _mode(args))
    except NotProvableError:
        _emit(args, {"verdict": "not-provable"}, "not-provable")
        return EXIT_NO
    _emit(args, {"verdict": "provable", "proof": render_proof(proof)}, render_proof(proof))
    return EXIT_YES


def cmd_search(args) -> int:
    inference = parse_inference(args.inference)
    result = bounded_search(inference, _mode(args), args.max_nodes, _load_theory(args))
    if result.found:
        _emit(args, {"verdict": "provable", "proof": render_proof(result.proof)}, render_proof(result.proof))
        return EXIT_YES
    _emit(args, {"verdict": "unknown", "max_nodes": args.max_nodes}, "unknown")
    return EXIT_UNKNOWN


def cmd_elim_cut(args) -> int:
    proof = parse_proof(_read(args.proof))
    mode = _mode(args)
    check(proof, mode, _load_theory(args))
    out = eliminate_cuts(proof, mode)
    remaining = len(cut_paths(out))
    _emit(
        args,
        {"proof": render_proof(out), "remaining_cuts": remaining},
        render_proof(out) + (f"\n# {remaining} axiom-fed cut(s) remain" if remaining else ""),
    )
    return EXIT_YES


def cmd_canon(args) -> int:
    proof = parse_proof(_read(args.proof))
    out = canonicalize(proof, _mode(args))
    _emit(args, {"proof": render_proof(out)}, render_proof(out))
    return EXIT_YES


def cmd_equiv(args) -> int:
    p1 = parse_proof(_read(args.proof1))
    p2 = parse_proof(_read(args.proof2))
    same = proofs_equivalent(p1, p2, _mode(args))
    _emit(args, {"equivalent": same}, "equivalent" if same else "distinct")
    return EXIT_YES if same else EXIT_NO


def cmd_theory_decide(args) -> int:
    if not args.theory:
        raise ParseError("theory decide requires --theory FILE")
    th = theory_mod.load_theory(args.theory)
    inference = parse_inference(args.inference)
    verdict = theory_mod.decide_in_theory(th, inference, args.cap)
    payload = {"verdict": verdict.status, "cap": verdict.cap}
    text = verdict.status
    if verdict.status == "provable":
        payload["counts"] = {
            "available": list(verdict.counts["available"]),
            "disposable": list(verdict.counts["disposable"]),
            "conversions": list(verdict.counts["conversions"]),
        }
        payload["witness"] = render_proof(verdict.witness)
        text = f"provable {payload['counts']}"
    print(json.dumps(payload) if args.json else text)
    return {"provable": EXIT_YES, "not-provable": EXIT_NO, "unknown": EXIT_UNKNOWN}[verdict.status]


def cmd_model_check(args) -> int:
    model = monoid.parse_model(_read(args.model))
    violations = monoid.validate_model(model)
    if violations:
        _emit(args, {"valid": False, "violations": violations}, "invalid model:\n" + "\n".join(violations))
        return EXIT_INPUT
    inference = parse_inference(args.inference)
    holds = monoid.entails(model, inference)
    _emit(args, {"valid": True, "entails": holds}, "entailed" if holds else "not-entailed")
    return EXIT_YES if holds else EXIT_NO


def cmd_coherence_sweep(args) -> int:
    mode = _mode(args)
    atoms = [Atom(f"P{i}") for i in range(args.max_atoms)]
    objects = tuple(atoms) + (UNIT,)
    failures = []
    checked = 0
    plans = [("triangle", 2), ("pentagon", 4)]
    if mode is Mode.T:
        plans += [("hexagon", 3), ("symmetry-unit", 1), ("symmetry-inverse", 2)]
    for name, arity in plans:
        for combo in itertools.product(objects, repeat=arity):
            checked += 1
            if not category.check_diagram(name, mode, terms=combo):
                failures.append((name, combo))
    if mode is Mode.T:
        f = category.symmetry(atoms[0], atoms[1], mode) if len(atoms) >= 2 else category.identity(objects[0], mode)
        g = category.identity(objects[0], mode)
        checked += 3
        if not category.check_diagram("interchange", mode, morphisms=(f, category.inverse(f), g, g)):
            failures.append(("interchange", ()))
        if not category.check_diagram("nat-lambda", mode, morphisms=(f,)):
            failures.append(("nat-lambda", ()))
        if not category.check_diagram("nat-sigma", mode, morphisms=(f, g)):
            failures.append(("nat-sigma", ()))
    payload = {"checked": checked, "failures": [n for n, _ in failures]}
    _emit(args, payload, f"checked {checked} diagram instance(s), {len(failures)} failure(s)")
    return EXIT_YES if not failures else EXIT_NO


def build_parser() -> _Parser:
    parser = _Parser(prog="tensorlogic", description=__doc__)
    parser.add_argument("--mode", choices=["t", "tprime"], default="t", help="calculus mode")
    parser.add_argument("--theory", help="theory file licensing axiom leaves")
    parser.add_argument("--cap", type=int, default=16, help="axiom usage cap for theory decisions")
    parser.add_argument("--max-nodes", type=int, default=2000, help="node bound for proof search")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomised commands")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a proof file and print its conclusion")
    p.add_argument("proof", help="proof s-expression file, or - for stdin")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("decide", help="decide a plain inference")
    p.add_argument("inference")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("prove", help="print the canonical proof of an inference")
    p.add_argument("inference")
    p.set_defaults(fn=cmd_prove)

    p = sub.add_parser("search", help="bounded backward proof search")
    p.add_argument("inference")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("elim-cut", help="eliminate cuts from a proof file")
    p.add_argument("proof")
    p.set_defaults(fn=cmd_elim_cut)

    p = sub.add_parser("canon", help="print the canonical form of a proof file")
    p.add_argument("proof")
    p.set_defaults(fn=cmd_canon)

    p = sub.add_parser("equiv", help="compare two proofs up to canonical form")
    p.add_argument("proof1")
    p.add_argument("proof2")
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("theory", help="theory commands")
    tsub = p.add_subparsers(dest="theory_command", required=True)
    t = tsub.add_parser("decide", help="decide an inference in the given --theory")
    t.add_argument("inference")
    t.set_defaults(fn=cmd_theory_decide)

    p = sub.add_parser("model", help="model commands")
    msub = p.add_subparsers(dest="model_command", required=True)
    m = msub.add_parser("check", help="validate a model file and evaluate entailment")
    m.add_argument("model")
    m.add_argument("inference")
    m.set_defaults(fn=cmd_model_check)

    p = sub.add_parser("coherence", help="coherence commands")
    csub = p.add_subparsers(dest="coherence_command", required=True)
    c = csub.add_parser("sweep", help="check coherence diagrams over small objects")
    c.add_argument("--max-atoms", type=int, default=2)
    c.set_defaults(fn=cmd_coherence_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, theory_mod.TheoryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ProofError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
