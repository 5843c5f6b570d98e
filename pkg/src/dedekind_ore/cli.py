"""Command-line front end.

Every subcommand builds one JSON-ready document and a list of text lines;
``--json`` (or ``DEDEKIND_ORE_FORMAT=json``) prints the document, otherwise
the lines.  Exit codes: 0 success, 1 usage, 2 domain error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import random
import sys
from typing import Callable, Sequence

from .classgroup import class_group, class_number_by_generation, class_of, unit_group, units
from .constructible import (
    closure,
    independence_check,
    make_window,
    parse_constructible,
    verify_projection_identities,
)
from .errors import BudgetExceeded, DomainError, ParseError
from .fields import make_order
from .formats import format_element_bare, parse_element, parse_fractional, parse_ideal
from .ideals import ideal_colon, ideal_intersect, ideal_mul, ideal_sum, ideals_of_norm_up_to
from .orbits import decompose, load_ktable
from .primes import crt_solve, prime_ideals_up_to
from .semigroups import (
    Family,
    QuotientPair,
    SemigroupKind,
    axb,
    common_upper_bound,
    compose,
    direct_mul,
    find_generator,
    group_mul,
    make_kind,
    mult,
    parse_semigroup_element,
    principal,
    random_element,
)
from .witnesses import Pi4Instance, Pi5Instance, pi4_result, pi5_result

FORMAT_ENV = "DEDEKIND_ORE_FORMAT"
EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET = 1, 2, 3

Result = tuple[dict, list[str]]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- helpers ----------------------------------------------------------------------


def _kind(args) -> SemigroupKind:
    return make_kind(args.semigroup, make_order(args.d))


def default_generators(kind: SemigroupKind, norm_bound: int) -> list:
    """Translations by 1 and w, plus one generator of each proper principal
    ideal of norm at most ``norm_bound``."""
    order = kind.order
    alphas = []
    for I in ideals_of_norm_up_to(order, norm_bound):
        if I.is_unit():
            continue
        g = find_generator(I)
        if g is not None:
            alphas.append(g)
    if kind.variant is Family.AXB:
        gens = [axb(kind, 1, 1)]
        if not order.is_z:
            gens.append(axb(kind, order.omega, 1))
        return gens + [axb(kind, 0, a) for a in alphas]
    if kind.variant is Family.MULT:
        return [mult(kind, a) for a in alphas]
    return [principal(kind, a) for a in alphas]


# -- subcommands --------------------------------------------------------------------


def cmd_classgroup(args) -> Result:
    order = make_order(args.d)
    cg = class_group(order)
    h2 = class_number_by_generation(order)
    doc = {
        "d": args.d,
        "disc": order.disc,
        "h": cg.h,
        "h_by_generation": h2,
        "forms": [str(f) for f in cg.elements],
        "representatives": [str(I) for I in cg.representatives],
        "orders": [cg.element_order(i) for i in range(cg.h)],
        "table": [list(row) for row in cg.table],
    }
    lines = [f"d={args.d} disc={order.disc} h={cg.h}"]
    for i, (f, I) in enumerate(zip(cg.elements, cg.representatives)):
        lines.append(f"  {i}: form {f}  ideal {I}  order {cg.element_order(i)}")
    return doc, lines


def cmd_units(args) -> Result:
    order = make_order(args.d)
    ug = unit_group(order)
    us = [format_element_bare(u) for u in units(order)]
    doc = {"d": args.d, "kind": ug.kind, "torsion_order": ug.torsion_order, "units": us}
    return doc, [f"d={args.d} {ug}", "units: " + ", ".join(us)]


def cmd_primes(args) -> Result:
    order = make_order(args.d)
    rows = prime_ideals_up_to(order, args.norm_bound)
    doc = {
        "d": args.d,
        "bound": args.norm_bound,
        "primes": [
            {"ideal": str(P), "norm": P.norm, "residue_degree": f, "ramified": ram} for P, f, ram in rows
        ],
    }
    lines = [f"{P}  norm={P.norm}  f={f}{'  ramified' if ram else ''}" for P, f, ram in rows]
    return doc, lines


def cmd_ideal(args) -> Result:
    order = make_order(args.d)
    op, ops = args.op, args.operands
    arity = {"show": 1, "norm": 1, "class": 1, "inverse": 1, "mul": 2, "sum": 2, "intersect": 2, "colon": 2}
    if op == "crt":
        if not ops or len(ops) % 2:
            raise ParseError("crt takes residue/ideal pairs")
        congr = [(parse_element(ops[i], order), parse_ideal(ops[i + 1], order)) for i in range(0, len(ops), 2)]
        x = crt_solve(congr)
        doc = {"d": args.d, "op": op, "result": format_element_bare(x)}
        return doc, [doc["result"]]
    if len(ops) != arity[op]:
        raise ParseError(f"{op} takes {arity[op]} ideal argument(s)")
    if op in ("show", "norm", "class", "inverse"):
        F = parse_fractional(ops[0], order)
        if op == "show":
            res = str(F)
        elif op == "norm":
            res = str(F.norm())
        elif op == "inverse":
            res = str(F.inverse())
        else:
            cg = class_group(order)
            res = str(cg.elements[class_of(F, cg)])
    else:
        I, J = parse_ideal(ops[0], order), parse_ideal(ops[1], order)
        if op == "colon":
            res = str(ideal_colon(I, J))
        else:
            fn = {"mul": ideal_mul, "sum": ideal_sum, "intersect": ideal_intersect}[op]
            res = str(fn(I, J))
    doc = {"d": args.d, "op": op, "operands": list(ops), "result": res}
    return doc, [res]


def cmd_closure(args) -> Result:
    kind = _kind(args)
    if args.generator:
        gens = [parse_semigroup_element(g, kind) for g in args.generator]
    else:
        gens = default_generators(kind, args.norm_bound)
    family = closure(kind, gens, args.norm_bound, max_iterations=args.max_iterations)
    sets = [str(X) for X in family]
    doc = {
        "semigroup": kind.variant.value,
        "d": args.d,
        "norm_bound": args.norm_bound,
        "generators": [str(g) for g in gens],
        "count": len(sets),
        "nonempty": sum(1 for X in family if not X.is_empty),
        "sets": sets,
    }
    lines = [f"{doc['nonempty']} nonempty sets + empty, norm <= {args.norm_bound}"] + sets
    return doc, lines


def cmd_independence(args) -> Result:
    kind = _kind(args)
    X = parse_constructible(args.set, kind)
    pieces = [parse_constructible(p, kind) for p in args.piece]
    res = independence_check(X, pieces)
    doc = {"semigroup": kind.variant.value, "d": args.d, "set": str(X), "pieces": [str(p) for p in pieces]}
    doc.update(res.to_json())
    if res.covered:
        line = f"covered by piece {res.index}"
    else:
        line = f"uncovered witness {res.witness}"
    return doc, [line]


def cmd_group_law(args) -> Result:
    kind = _kind(args)
    rng = random.Random(args.seed)
    mismatches = second = 0
    example = None
    for i in range(args.samples):
        g1 = QuotientPair(random_element(kind, rng, 5), random_element(kind, rng, 5))
        g2 = QuotientPair(random_element(kind, rng, 5), random_element(kind, rng, 5))
        y = common_upper_bound(g1.x, g2.p)
        prod = group_mul(g1, g2, y)
        direct = direct_mul(kind, g1.normal_form, g2.normal_form)
        if prod.normal_form != direct:
            mismatches += 1
        y2 = compose(random_element(kind, rng, 3), y)
        if group_mul(g1, g2, y2) != prod:
            second += 1
        if i == 0:
            example = {"left": str(g1), "right": str(g2), "product": str(prod)}
    doc = {
        "semigroup": kind.variant.value,
        "d": args.d,
        "seed": args.seed,
        "samples": args.samples,
        "mismatches": mismatches,
        "second_bound_mismatches": second,
        "passed": mismatches == 0 and second == 0,
        "example": example,
    }
    lines = [f"{args.samples} products, {mismatches} mismatches, {second} second-bound mismatches"]
    if example:
        lines.append(f"e.g. {example['left']} * {example['right']} = {example['product']}")
    return doc, lines


def cmd_decompose(args) -> Result:
    kind = _kind(args)
    dec = decompose(kind, load_ktable(args.ktable))
    doc = dec.to_json()
    lines = [f"{kind.variant.value} d={args.d}: h={dec.class_number}"]
    for r in dec.rows:
        lines.append(f"  {r.class_form}  {r.representative}  stab {r.stabilizer}  K {r.rank}")
    lines.append(f"total known ranks ({dec.total_k0},{dec.total_k1})")
    for s in dec.symbolic:
        lines.append(f"  + {s}")
    return doc, lines


def cmd_witness(args) -> Result:
    order = make_order(args.d)
    ambient = parse_ideal(args.ambient, order) if args.ambient else parse_ideal("<1>", order)
    pieces = [parse_ideal(p, order) for p in args.piece]
    if args.which == "pi4":
        pairs = []
        for bp, ap, b, a in args.pair or []:
            pairs.append(((parse_element(bp, order), parse_element(ap, order)),
                          (parse_element(b, order), parse_element(a, order))))
        res = pi4_result(Pi4Instance(ambient, pieces, pairs))
    else:
        if args.pair:
            raise ParseError("pi5 instances take no pairs")
        res = pi5_result(Pi5Instance(ambient, pieces))
    doc = {"d": args.d, "ambient": str(ambient), "pieces": [str(p) for p in pieces]}
    doc.update(res.to_json())
    lines = [" ".join(f"{k}={v}" for k, v in res.witness.items())]
    lines += [f"  {c}: {'ok' if ok else 'FAIL'}" for c, ok in res.checks.items()]
    return doc, lines


def _random_set(kind, rng, bound=12):
    from .constructible import all_constructible

    cands = [X for X in all_constructible(kind, bound) if not X.is_empty]
    return rng.choice(cands)


def cmd_verify_identities(args) -> Result:
    kind = _kind(args)
    if args.p is not None:
        if args.x is None:
            raise ParseError("--p needs --x")
        triples = [(
            parse_semigroup_element(args.p, kind),
            parse_constructible(args.x, kind),
            parse_constructible(args.y or args.x, kind),
        )]
    else:
        rng = random.Random(args.seed)
        triples = [
            (random_element(kind, rng, 3), _random_set(kind, rng), _random_set(kind, rng))
            for _ in range(args.samples)
        ]
    window = make_window(kind, args.radius, positive_only=args.positive)
    results = []
    for p, X, Y in triples:
        rep = verify_projection_identities(kind, p, X, Y, window)
        results.append({"p": str(p), "X": str(X), "Y": str(Y), **rep.to_json()})
    failed = sum(1 for r in results if not r["passed"])
    doc = {
        "semigroup": kind.variant.value,
        "d": args.d,
        "window_size": len(window),
        "cases": len(results),
        "failed": failed,
        "passed": failed == 0,
        "results": results,
    }
    lines = [f"{len(results)} case(s) on a window of {len(window)} points: {failed} failed"]
    for r in results[:5]:
        lines.append(f"  p={r['p']} X={r['X']} Y={r['Y']}: {'pass' if r['passed'] else 'FAIL'}")
    return doc, lines


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", type=int, default=0, help="squarefree d (0 means Z); default 0")
    common.add_argument("--json", action="store_const", const="json", dest="format", help="emit one JSON document")
    common.add_argument("--format", choices=("text", "json"), default=None, help=f"output format (env {FORMAT_ENV})")
    common.add_argument("--seed", type=int, default=0, help="seed for sampling-based checks")
    sg = argparse.ArgumentParser(add_help=False)
    sg.add_argument("--semigroup", choices=[f.value for f in Family], default="axb")

    p = _Parser(prog="dedekind-ore", description="Ideal arithmetic and constructible ideals of ax+b type semigroups over quadratic rings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classgroup", parents=[common], help="class group via reduced forms")
    s.set_defaults(func=cmd_classgroup)
    s = sub.add_parser("units", parents=[common], help="unit group")
    s.set_defaults(func=cmd_units)
    s = sub.add_parser("primes", parents=[common], help="prime ideals up to a norm bound")
    s.add_argument("--norm-bound", type=int, default=50)
    s.set_defaults(func=cmd_primes)

    s = sub.add_parser("ideal", parents=[common], help="ideal arithmetic")
    s.add_argument("op", choices=("show", "norm", "class", "inverse", "mul", "sum", "intersect", "colon", "crt"))
    s.add_argument("operands", nargs="*", help="ideals like '[2, 1+1*w]' or '<2, 1+w>'; crt takes residue/ideal pairs")
    s.set_defaults(func=cmd_ideal)

    s = sub.add_parser("closure", parents=[common, sg], help="constructible ideals up to a norm bound")
    s.add_argument("--norm-bound", type=int, default=4)
    s.add_argument("--generator", action="append", default=[], help="e.g. 'axb:(1|1)', 'm:(2)'; repeatable")
    s.add_argument("--max-iterations", type=int, default=1000)
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("independence", parents=[common, sg], help="cover test with an uncovered witness")
    s.add_argument("--set", required=True, help="e.g. '(0 mod [1]) x [1]^x'")
    s.add_argument("--piece", action="append", default=[])
    s.set_defaults(func=cmd_independence)

    s = sub.add_parser("group-law", parents=[common, sg], help="sampled check of the quotient-pair product")
    s.add_argument("--samples", type=int, default=200)
    s.set_defaults(func=cmd_group_law)

    s = sub.add_parser("decompose", parents=[common, sg], help="K-theory decomposition over the class group")
    s.add_argument("--ktable", default=None, help="JSON file or text {descriptor: [k0, k1]}")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("witness", parents=[common], help="pi4 / pi5 arithmetic witnesses")
    s.add_argument("which", choices=("pi4", "pi5"))
    s.add_argument("--ambient", default=None, help="ambient ideal (default R)")
    s.add_argument("--piece", action="append", default=[])
    s.add_argument("--pair", nargs=4, action="append", metavar=("B1", "A1", "B", "A"))
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("verify-identities", parents=[common, sg], help="window check of set-level identities")
    s.add_argument("--p", default=None)
    s.add_argument("--x", default=None)
    s.add_argument("--y", default=None)
    s.add_argument("--radius", type=int, default=6)
    s.add_argument("--positive", action="store_true", help="positive multipliers only (Z)")
    s.add_argument("--samples", type=int, default=10)
    s.set_defaults(func=cmd_verify_identities)
    return p


def _emit(fmt: str, doc: dict, lines: Sequence[str], out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=False) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format or os.environ.get(FORMAT_ENV, "text")
    if fmt not in ("text", "json"):
        err.write(f"{FORMAT_ENV} must be 'text' or 'json', got {fmt!r}\n")
        return EXIT_USAGE
    func: Callable = args.func
    try:
        doc, lines = func(args)
    except BudgetExceeded as exc:
        code, msg = EXIT_BUDGET, f"budget exceeded: {exc}"
    except DomainError as exc:
        code, msg = EXIT_DOMAIN, f"error: {exc}"
    else:
        _emit(fmt, doc, lines, out)
        return 0
    err.write(msg + "\n")
    if fmt == "json":
        out.write(json.dumps({"error": {"exit_code": code, "message": str(msg)}}) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
