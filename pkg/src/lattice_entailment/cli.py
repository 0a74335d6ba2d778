"""Command-line front end.

Exit codes: 0 yes/success, 1 no, 2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import documents
from .engine import (
    DEFAULT_MAX_SUCCEDENT,
    EntailmentContext,
    entailment_witnesses,
    format_witness,
    open_tuple,
)
from .errors import InputError, InvariantViolation, NoCounterexample
from .generated import DEFAULT_MAX_CLASSES, generate_boolean_algebra
from .lattice import FLAVORS, LATTICE, booleanization, parse_algebra_spec
from .models import (
    ExtensionProblem,
    conservativity_counterexample,
    countermodel,
    enumerate_homs,
    sikorski_extend,
)

EXIT_CODES = {"yes": 0, "no": 1, "error": 2, "internal": 3}


@dataclass
class ResultEnvelope:
    verdict: str
    payload: list[str]
    trace: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def render(self) -> str:
        lines = self.payload + self.trace
        return "".join(line + "\n" for line in lines)


def _context(args) -> EntailmentContext:
    L = documents.load_lattice(args.lattice)
    return EntailmentContext(L, parse_algebra_spec(args.algebra), args.flavor)


def cmd_validate(args) -> ResultEnvelope:
    L = documents.load_lattice(args.file)
    return ResultEnvelope(
        "yes",
        [
            f"valid: {L.name}",
            f"elements: {' '.join(L.elements)}",
            f"bottom: {L.bottom}",
            f"top: {L.top}",
            f"join-irreducibles: {' '.join(L.irreducibles)}",
        ],
    )


def cmd_entails(args) -> ResultEnvelope:
    ctx = _context(args)
    seq = documents.load_sequent(args.sequent, ctx)
    witnesses = entailment_witnesses(ctx, seq, args.max_succedent)
    if witnesses is not None:
        trace = [format_witness(alt, w) for alt, w in witnesses] if args.witness else []
        return ResultEnvelope("yes", ["entailed: yes"], trace)
    trace = []
    if args.witness:
        alt = open_tuple(ctx, seq, args.max_succedent)
        trace.append(f"consistent tuple={','.join(alt) if alt else '()'}")
    if args.countermodel:
        model = countermodel(ctx, seq)
        trace.append(f"countermodel: {model.hom.describe() if model else 'none'}")
    return ResultEnvelope("no", ["entailed: no"], trace)


def cmd_models(args) -> ResultEnvelope:
    homs = enumerate_homs(_context(args))
    if args.count:
        return ResultEnvelope("yes", [str(len(homs))])
    return ResultEnvelope("yes", [h.hom.describe() for h in homs])


def cmd_extend(args) -> ResultEnvelope:
    sub = documents.load_lattice(args.sub)
    big = documents.load_lattice(args.super)
    B = parse_algebra_spec(args.algebra)
    phi = documents.load_embedding(args.embedding, sub, big)
    alpha = documents.load_hom(args.hom, sub, B)
    beta = sikorski_extend(ExtensionProblem(phi, alpha))
    return ResultEnvelope(
        "yes",
        [f"extension: {beta.describe()}"],
        [f"restriction: {beta.compose(phi.hom).describe()}"],
    )


def cmd_booleanize(args) -> ResultEnvelope:
    L = documents.load_lattice(args.lattice)
    regular, dn = booleanization(L)
    joins = [
        f"join({x},{y}) = {regular.join(x, y)}"
        for i, x in enumerate(regular.elements)
        for y in regular.elements[i + 1 :]
    ]
    return ResultEnvelope(
        "yes",
        [
            f"regular: {' '.join(regular.elements)}",
            f"atoms: {' '.join(regular.atoms)}",
            f"double-negation: {dn.describe()}",
        ],
        joins,
    )


def cmd_generate(args) -> ResultEnvelope:
    L = documents.load_lattice(args.lattice)
    G = generate_boolean_algebra(L, args.max_classes)
    return ResultEnvelope("yes", documents.dump_json(G.as_dict()).splitlines())


def cmd_counterexample(args) -> ResultEnvelope:
    D = documents.load_lattice(args.lattice)
    try:
        report = conservativity_counterexample(D)
    except NoCounterexample:
        return ResultEnvelope("no", ["complemented: true"])
    return ResultEnvelope(
        "yes",
        ["complemented: false", *report.trace()],
        documents.dump_json(report.as_dict()).splitlines(),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-entail",
        description="Entailment relations of lattice maps into finite Boolean algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a lattice document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    def context_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lattice", required=True)
        p.add_argument("--algebra", required=True, help="powerset:N")
        p.add_argument("--flavor", choices=FLAVORS, default=LATTICE)

    p = sub.add_parser("entails", help="decide a sequent")
    context_args(p)
    p.add_argument("--sequent", required=True)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--countermodel", action="store_true")
    p.add_argument("--max-succedent", type=int, default=DEFAULT_MAX_SUCCEDENT)
    p.set_defaults(func=cmd_entails)

    p = sub.add_parser("models", help="enumerate homomorphisms")
    context_args(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_models)

    p = sub.add_parser("extend", help="extend a hom along an embedding")
    for flag in ("--sub", "--super", "--embedding", "--hom", "--algebra"):
        p.add_argument(flag, required=True)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("booleanize", help="regular elements and double negation")
    p.add_argument("--lattice", required=True)
    p.set_defaults(func=cmd_booleanize)

    p = sub.add_parser("generate", help="Boolean algebra generated by L x 2")
    p.add_argument("--lattice", required=True)
    p.add_argument("--max-classes", type=int, default=DEFAULT_MAX_CLASSES)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("counterexample", help="conservativity counterexample")
    p.add_argument("--lattice", required=True)
    p.set_defaults(func=cmd_counterexample)
    return parser


def run(argv: Sequence[str]) -> ResultEnvelope:
    """Parse ``argv`` and dispatch; module errors become error envelopes.

    Argument errors (unknown flags, missing options) exit through argparse
    with status 2.
    """
    args = build_parser().parse_args(argv)
    func: Callable[..., ResultEnvelope] = args.func
    try:
        return func(args)
    except InputError as exc:
        return ResultEnvelope("error", [], [f"error: {type(exc).__name__}: {exc}"])
    except InvariantViolation as exc:
        return ResultEnvelope("internal", [], [f"internal: {type(exc).__name__}: {exc}"])


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if result.verdict in ("yes", "no") else sys.stderr
    stream.write(result.render())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
