"""Command line front end.

Subcommands mirror the library: chain, verify-lemma, gr1, module,
diagram-classify, explore, example.  Text output is human oriented; with
--format json exactly one document is written to stdout, tagged with the
schema name.  Exit codes: 0 when the computation succeeds and every check
passes, 1 when a verification or validation check fails, 2 for usage
errors (including parameter values outside the domain).
"""

from __future__ import annotations

import argparse
import json
import sys

from .chain import build_chain, verify_seed_identities
from .cyclic_module import (
    build_cyclic_module,
    is_multiplicity_free,
    successor_weights,
    validate_cyclic_module,
)
from .diagram import (
    classify_isomorphic,
    field_element,
    make_diagram,
    make_field,
)
from .errors import DomainError, LengthMismatchError
from .explorer import find_cycles
from .serialize import (
    chain_document,
    classify_document,
    cycles_document,
    example_document,
    module_document,
    seed_report_document,
    successors_document,
)
from .symbolic import example_lines
from .weights import format_weight, make_params, make_weight, s_dual

PAIR_DASH = " —— "


def _int_tuple(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma separated integer list: {text!r}")


def _scalar_list(text: str) -> tuple:
    try:
        return tuple(
            tuple(int(c) for c in part.split(",")) for part in text.split(";")
        )
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a scalar list: {text!r}")


def _emit(args, doc: dict, lines) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_chain(args) -> int:
    params = make_params(args.p, args.f)
    chain = build_chain(params, args.r, args.m, args.rotation)
    lines = [
        f"chain p={params.p} f={params.f} r=({','.join(map(str, chain.start_digits))})"
        f" m={chain.start_twist} rotation={chain.rotation} length={chain.length}"
    ]
    for k, w in enumerate(chain.weights):
        lines.append(f"  step {k}: {format_weight(w)}  twist_sum={chain.twists[k]}")
    lines.append("closed: true")
    _emit(args, chain_document(chain), lines)
    return 0


def cmd_verify_lemma(args) -> int:
    params = make_params(args.p, args.f)
    report = verify_seed_identities(params, rng_seed=args.seed)
    checks = [
        ("identity after l steps", report.identity_ok),
        ("iterates and sign vectors distinct", report.distinct_ok),
        ("closing sum constant", report.sum_constant),
        ("closing sum zero mod p^f-1", report.sum_zero_mod),
        ("sign vector parity", report.parity_ok),
        ("digit-free term", report.constant_term_ok),
        ("column sums", report.column_sums_ok),
    ]
    lines = [f"verify p={params.p} f={params.f} over {report.r_count} digit tuples"]
    lines += [f"  {name}: {'ok' if ok else 'FAIL'}" for name, ok in checks]
    if report.sum_value is not None:
        lines.append(f"  closing sum value: {report.sum_value}")
    lines += [f"  witness: {w}" for w in report.witnesses]
    lines.append(f"passed: {'true' if report.passed else 'false'}")
    _emit(args, seed_report_document(report), lines)
    return 0 if report.passed else 1


def cmd_gr1(args) -> int:
    params = make_params(args.p, args.f)
    w = make_weight(args.weight, args.m, params)
    found = successor_weights(w)
    lines = [f"successors of {format_weight(w)}:"]
    lines += [f"  {format_weight(s)}" for s in found.weights]
    for digits in found.pruned:
        lines.append(f"  pruned digit tuple: {digits}")
    _emit(args, successors_document(w, found), lines)
    return 0


def cmd_module(args) -> int:
    params = make_params(args.p, args.f)
    chain = build_chain(params, args.r, args.m, args.rotation)
    module = build_cyclic_module(chain)
    validation = validate_cyclic_module(module)
    lines = [f"cyclic module with {module.n} pairs:"]
    for pair in module.pairs:
        lines.append(
            f"  {format_weight(pair.sub)}{PAIR_DASH}{format_weight(pair.quotient)}"
        )
    lines.append(f"multiplicity_free: {'true' if is_multiplicity_free(module) else 'false'}")
    lines.append(f"validation: {'passed' if validation.passed else 'FAILED'}")
    lines += [f"  {fail}" for fail in validation.failures]
    _emit(args, module_document(module, validation), lines)
    return 0 if validation.passed else 1


def cmd_diagram_classify(args) -> int:
    params = make_params(args.p, args.f)
    if len(args.scalars) != 2:
        raise DomainError("pass --scalars twice, once per diagram")
    chain = build_chain(params, args.r, args.m, args.rotation)
    module = build_cyclic_module(chain)
    spec = make_field(params.p, args.field_degree)
    left = make_diagram(module, (field_element(spec, c) for c in args.scalars[0]))
    right = make_diagram(module, (field_element(spec, c) for c in args.scalars[1]))
    result = classify_isomorphic(left, right)
    fmt = lambda e: ",".join(map(str, e.coeffs))
    lines = [
        f"field F_{params.p}^{args.field_degree}, modulus {list(spec.modulus)}",
        f"product left:  {fmt(result.product_left)}",
        f"product right: {fmt(result.product_right)}",
        f"isomorphic: {'true' if result.isomorphic else 'false'}",
    ]
    if result.witness is not None:
        lines.append("witness: " + "; ".join(fmt(a) for a in result.witness))
    _emit(args, classify_document(left, right, result), lines)
    return 0


def cmd_explore(args) -> int:
    params = make_params(args.p, args.f)
    start = make_weight(args.weight, args.m, params)
    max_len = args.max_len if args.max_len else 2 * params.f
    result = find_cycles(start, max_len, args.budget)
    if result.cycles:
        lines = [f"cycles through {format_weight(start)} (max_len={max_len}):"]
        for cyc, rep in zip(result.cycles, result.cycle_reports):
            arrow = " -> ".join(format_weight(w) for w in cyc)
            flags = []
            if rep.valid:
                flags.append("valid")
            if rep.multiplicity_free:
                flags.append("multiplicity-free")
            if rep.boundary_vertices:
                flags.append("boundary digits")
            lines.append(f"  {arrow}  [{', '.join(flags) if flags else 'rejected'}]")
    else:
        lines = [f"no cycles found (max_len={max_len})"]
    lines.append(f"canonical rotations found: {list(result.canonical_hits)}")
    lines.append(f"pruned boundary successors: {result.pruned_boundary}")
    if result.truncated:
        lines.append("search truncated: visit budget exhausted")
    _emit(args, cycles_document(result), lines)
    return 0


def cmd_example(args) -> int:
    if args.f not in (2, 3):
        raise DomainError("the worked rows are rendered for f in {2, 3}")
    lines = list(example_lines(args.f))
    if args.with_twists:
        if args.p is None or args.r is None:
            raise DomainError("--with-twists needs concrete --p and --r")
        params = make_params(args.p, args.f)
        chain = build_chain(params, args.r, args.m)
        rows = []
        for k, line in enumerate(lines, start=1):
            sub_part, quo_part = line.split(PAIR_DASH)
            sub_tw = chain.weights[k].twist
            quo_tw = s_dual(chain.weights[k - 1]).twist
            rows.append(
                f"{sub_part}⊗det^{sub_tw}{PAIR_DASH}{quo_part}⊗det^{quo_tw}"
            )
        lines = rows
    _emit(args, example_document(args.f, lines), lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclic-weights",
        description="exact cyclic weight chains, modules and diagrams",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(sp, p=True, f=True):
        if p:
            sp.add_argument("--p", type=int, required=True, help="prime > 3")
        if f:
            sp.add_argument("--f", type=int, required=True, help="residue degree")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("chain", help="build one closed chain")
    common(sp)
    sp.add_argument("--r", type=_int_tuple, required=True, help="start digits, e.g. 1,1")
    sp.add_argument("--m", type=int, default=0, help="start twist")
    sp.add_argument("--rotation", type=int, default=0, help="seed rotation")
    sp.set_defaults(handler=cmd_chain)

    sp = sub.add_parser("verify-lemma", help="check the closure identities")
    common(sp)
    sp.add_argument("--seed", type=int, default=0, help="sampling seed for huge boxes")
    sp.set_defaults(handler=cmd_verify_lemma)

    sp = sub.add_parser("gr1", help="successor weights of one weight")
    common(sp)
    sp.add_argument("--weight", type=_int_tuple, required=True, help="digits, e.g. 1,1")
    sp.add_argument("--m", type=int, default=0, help="twist")
    sp.set_defaults(handler=cmd_gr1)

    sp = sub.add_parser("module", help="build and validate the cyclic module")
    common(sp)
    sp.add_argument("--r", type=_int_tuple, required=True)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--rotation", type=int, default=0)
    sp.set_defaults(handler=cmd_module)

    sp = sub.add_parser("diagram-classify", help="compare two scalar decorations")
    common(sp)
    sp.add_argument("--r", type=_int_tuple, required=True)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--rotation", type=int, default=0)
    sp.add_argument("--field-degree", type=int, default=1)
    sp.add_argument(
        "--scalars",
        type=_scalar_list,
        action="append",
        required=True,
        help="semicolon separated scalars, coefficients comma separated; give twice",
    )
    sp.set_defaults(handler=cmd_diagram_classify)

    sp = sub.add_parser("explore", help="search for cycles through a weight")
    common(sp)
    sp.add_argument("--weight", type=_int_tuple, required=True)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--max-len", type=int, default=0, help="default 2f")
    sp.add_argument("--budget", type=int, default=10**7)
    sp.set_defaults(handler=cmd_explore)

    sp = sub.add_parser("example", help="symbolic rows of the closed chain")
    sp.add_argument("--f", type=int, required=True, choices=(2, 3))
    sp.add_argument("--symbolic", action="store_true", help="always on; kept explicit")
    sp.add_argument("--with-twists", action="store_true")
    sp.add_argument("--p", type=int)
    sp.add_argument("--r", type=_int_tuple)
    sp.add_argument("--m", type=int, default=0)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(handler=cmd_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (DomainError, LengthMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
