"""Batch command line front end.

Line-oriented "key = value" output for diffable golden tests; exit code
0 on success, 2 on invalid input, 3 on budget or guard exhaustion, 4 on
an internal cross-check failure.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import burnside3 as bg
from . import coset_enumeration as ce
from . import fox_coloring as fox
from . import move_calculus as mv
from . import symplectic_lagrangian as sym
from .errors import (
    BudgetExceededError,
    CrossCheckError,
    TangleLabError,
)
from .tangle_core import (
    Frac,
    closure,
    compile_expr,
    parse_braid,
    parse_conway,
    parse_diagram_text,
    braid_closure,
    random_algebraic_expr,
    slope,
)

__all__ = ["run", "main"]


def _diagram_from_args(args):
    sources = [s for s in (args.braid, args.conway, args.diagram) if s]
    if len(sources) != 1:
        raise ValueError("need exactly one of --braid, --conway, --diagram")
    if args.braid:
        d = braid_closure(parse_braid(args.braid))
    elif args.conway:
        d = compile_expr(parse_conway(args.conway))
    else:
        with open(args.diagram) as fh:
            d = parse_diagram_text(fh.read())
    if getattr(args, "closure", None):
        d = closure(d, args.closure)
    return d


def _add_diagram_flags(sub, with_closure=True):
    sub.add_argument("--braid", help='braid line "<n>: i1 i2 ..."')
    sub.add_argument("--conway", help="Conway expression")
    sub.add_argument("--diagram", help="diagram file path")
    if with_closure:
        sub.add_argument(
            "--closure", choices=["numerator", "denominator"], default=None
        )


def _parse_fraction(text):
    if text.strip() in ("inf", "1/0"):
        return Frac(1, 0)
    num, _, den = text.partition("/")
    return Frac.make(int(num), int(den) if den else 1)


def _print_subspace(out, name, subspace):
    out.append(f"{name}_dim = {subspace.dim}")
    for i, row in enumerate(subspace.rows):
        out.append(f"{name}[{i}] = " + " ".join(str(x) for x in row))


def _cmd_color(args, out):
    d = _diagram_from_args(args)
    if args.abf_t is not None:
        space = fox.abf_space(d, args.p, args.abf_t)
        out.append(f"abf_col_{args.p}(t={args.abf_t}) = {space.count}")
    else:
        space = fox.coloring_space(d, args.mod)
        out.append(f"col_{args.mod} = {space.count}")
    return 0


def _cmd_tri(args, out):
    d = _diagram_from_args(args)
    out.append(f"tri = {fox.tri(d)}")
    return 0


def _cmd_boundary(args, out):
    d = _diagram_from_args(args)
    if args.integers:
        out.append(f"virtual_index = {fox.virtual_index(d)}")
        return 0
    img = fox.boundary_image(d, args.p)
    _print_subspace(out, "psi", img)
    if d.n >= 2:
        red = fox.reduced_boundary_image(d, args.p)
        _print_subspace(out, "psihat", red)
    return 0


def _cmd_lagrangians(args, out):
    if args.count_only:
        out.append(str(sym.lagrangian_count(args.p, args.n)))
        return 0
    if args.realize:
        witnesses, missing = sym.realize_lagrangians(
            args.p, args.n, generator_budget=args.budget, seed=args.seed
        )
        out.append(f"lagrangians = {sym.lagrangian_count(args.p, args.n)}")
        out.append(f"realized = {len(witnesses)}")
        out.append(f"unrealized = {len(missing)}")
        from .tangle_core import print_conway

        for s in sorted(witnesses, key=lambda s: s.rows):
            rows = ";".join(" ".join(str(x) for x in r) for r in s.rows)
            out.append(f"witness {rows} = {print_conway(witnesses[s])}")
        return 0
    spaces = sym.enumerate_lagrangians(args.p, args.n, budget=args.budget)
    out.append(f"count = {len(spaces)}")
    for s in spaces:
        out.append(";".join(" ".join(str(x) for x in r) for r in s.rows))
    return 0


def _cmd_census(args, out):
    c = sym.matching_census(args.n)
    odd = 1
    pow2 = 1
    for i in range(1, args.n):
        odd *= 2 * i + 1
        pow2 *= 2**i + 1
    out.append(f"census = {c}")
    out.append(f"product_odd_reading = {odd}")
    out.append(f"lagrangian_count = {pow2}")
    out.append(f"matches_odd_reading = {c == odd}")
    out.append(f"all_lagrangians_realized = {c == pow2}")
    return 0


def _cmd_reduce(args, out):
    expr = parse_conway(args.conway)
    res = mv.reduce_2algebraic(expr, args.p)
    out.append(f"target = {res.target}")
    out.append(f"circles = {res.circles}")
    for line in mv.certificate_lines(res):
        out.append(line)
    return 0


def _cmd_slope(args, out):
    out.append(f"slope = {slope(parse_conway(args.conway))}")
    return 0


def _cmd_move_check(args, out):
    rng = random.Random(args.seed)
    if args.shifts is not None:
        first, second = mv.fraction_shift_identities(args.p, args.shifts)
        out.append(f"shift_down = {first}")
        out.append(f"shift_up = {second}")
        return 0
    if args.mq:
        frac = mv.mq_to_fraction(args.mq[0], args.mq[1])
        out.append(f"mq_fraction = {frac}")
    elif args.fraction:
        frac = _parse_fraction(args.fraction)
    else:
        frac = Frac.make(args.p, 1)
    checked = 0
    for _ in range(args.trials):
        d = compile_expr(random_algebraic_expr(2, rng, max_depth=3))
        arcs = sorted(d.arcs)
        if len(arcs) < 2:
            continue
        a, b = rng.sample(arcs, 2)
        mv.invariance_harness(d, (a, b), frac, args.p)
        checked += 1
    out.append(f"move = {frac}")
    out.append(f"checked = {checked}")
    out.append("violations = 0")
    return 0


def _read_word(args):
    if args.word_file:
        with open(args.word_file) as fh:
            text = fh.read()
    elif args.word:
        text = args.word
    elif args.letters:
        text = " ".join(args.letters)
    else:
        raise ValueError("need a word: positional, --word, or --word-file")
    return tuple(int(x) for x in text.split())


def _cmd_burnside(args, out):
    if args.action == "order":
        out.append(f"order = {bg.group_order(args.r)}")
        return 0
    if args.action == "enumerate":
        out.append(f"enumerated = {bg.enumerate_group(args.r)}")
        return 0
    if args.action == "check":
        out.append(f"checks = {bg.consistency_check(args.r, seed=args.seed)}")
        out.append("consistent = True")
        return 0
    if args.action == "eval":
        word = _read_word(args)
        el = bg.evaluate_word(args.r, word)
        out.append("TRIVIAL" if el.is_identity() else "NONTRIVIAL")
        out.append(f"a = {' '.join(str(x) for x in el.a)}")
        out.append(f"b = {' '.join(str(x) for x in el.b)}")
        out.append(f"c = {' '.join(str(x) for x in el.c)}")
        return 0
    raise ValueError(f"unknown burnside action {args.action!r}")


def _cmd_obstruct(args, out):
    word = parse_braid(args.braid)
    if args.kill:
        kills = [args.kill]
    else:
        kills = list(range(1, word.strands + 1))
    reports = [bg.obstruction(word, kill=kill) for kill in kills]
    for kill, rep in zip(kills, reports):
        out.append(f"kill_{kill} = {rep.verdict}")
    verdict = (
        "OBSTRUCTED"
        if any(r.verdict == "OBSTRUCTED" for r in reports)
        else "INCONCLUSIVE"
    )
    out.append(f"verdict = {verdict}")
    out.append(f"tri = {reports[0].tri_closure}")
    if reports[0].quotient is not None:
        out.append(f"quotient_order = {reports[0].quotient}")
    return 0


def _cmd_braid_quotient(args, out):
    pres = ce.braid_presentation(args.n, args.k)
    table = ce.enumerate_cosets(pres, max_cosets=args.budget)
    if args.count_only:
        out.append(str(table.order))
        return 0
    out.append(f"order = {table.order}")
    if args.classes:
        count, classes, reps = ce.conjugacy_classes(table)
        out.append(f"classes = {count}")
        for rep_word, cls in zip(reps, classes):
            word = " ".join(str(x) for x in rep_word) if rep_word else "e"
            out.append(f"class {word} : size = {len(cls)}")
    if args.word_equal:
        w1 = tuple(int(x) for x in args.word_equal[0].split())
        w2 = tuple(int(x) for x in args.word_equal[1].split())
        out.append(f"equal = {ce.word_equal(table, w1, w2)}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tanglelab",
        description="Exact tangle invariants: colorings, Lagrangian "
        "boundaries, rational moves, Burnside obstructions, braid quotients.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("color", help="Fox or twisted coloring count")
    _add_diagram_flags(s)
    s.add_argument("--mod", type=int, default=3)
    s.add_argument("--p", type=int, default=7)
    s.add_argument("--abf-t", type=int, default=None, dest="abf_t")
    s.set_defaults(func=_cmd_color)

    s = subs.add_parser("tri", help="number of Fox 3-colorings")
    _add_diagram_flags(s)
    s.set_defaults(func=_cmd_tri)

    s = subs.add_parser("boundary", help="boundary coloring subspaces")
    _add_diagram_flags(s, with_closure=False)
    s.add_argument("--p", type=int, default=3)
    s.add_argument("--integers", action="store_true")
    s.set_defaults(func=_cmd_boundary)

    s = subs.add_parser("lagrangians", help="count, list, or realize")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count-only", action="store_true", dest="count_only")
    s.add_argument("--realize", action="store_true")
    s.add_argument("--budget", type=int, default=20000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_lagrangians)

    s = subs.add_parser("census", help="mod-2 matching census")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=_cmd_census)

    s = subs.add_parser("reduce", help="reduce a 2-tangle expression mod p")
    s.add_argument("--conway", required=True)
    s.add_argument("--p", type=int, required=True)
    s.set_defaults(func=_cmd_reduce)

    s = subs.add_parser("slope", help="continued fraction slope")
    s.add_argument("--conway", required=True)
    s.set_defaults(func=_cmd_slope)

    s = subs.add_parser("move-check", help="random move invariance harness")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--fraction", default=None, help='move fraction "a/b"')
    s.add_argument("--mq", type=int, nargs=2, default=None,
                   help="use the (m,q)-move fraction (mq+1)/q")
    s.add_argument("--shifts", type=int, default=None,
                   help="print the shifted fractions p/(p-q), p/(-(p+q))")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=25)
    s.set_defaults(func=_cmd_move_check)

    s = subs.add_parser("burnside", help="exponent-3 Burnside arithmetic")
    s.add_argument("action", choices=["eval", "order", "enumerate", "check"])
    s.add_argument(
        "letters",
        nargs="*",
        default=(),
        help="signed letters '1 -2 3 -4' (generators x y z t = 1 2 3 4)",
    )
    s.add_argument("-r", type=int, required=True)
    s.add_argument("--word", help="signed letters, e.g. '1 -2 3'")
    s.add_argument("--word-file", dest="word_file")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_burnside)

    s = subs.add_parser("obstruct", help="3-move obstruction of a braid closure")
    s.add_argument("--braid", required=True)
    s.add_argument("--kill", type=int, default=None)
    s.set_defaults(func=_cmd_obstruct)

    s = subs.add_parser("braid-quotient", help="order, classes, word equality")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--count-only", action="store_true", dest="count_only")
    s.add_argument("--classes", action="store_true")
    s.add_argument("--word-equal", nargs=2, dest="word_equal")
    s.add_argument("--budget", type=int, default=10**6)
    s.set_defaults(func=_cmd_braid_quotient)

    return parser


_VALUED_OPTIONS = {"-r", "--word", "--word-file", "--seed"}


def _reorder_burnside_argv(argv):
    """argparse cannot match positionals that follow options inside a
    subcommand, so hoist the loose word tokens of `burnside <action>
    -r N '1 -2 ...'` to the front of the option list."""
    if len(argv) < 2 or argv[0] != "burnside":
        return argv
    head, rest = argv[:2], argv[2:]
    opts, loose = [], []
    i = 0
    while i < len(rest):
        tok = rest[i]
        if tok in _VALUED_OPTIONS:
            opts.extend(rest[i : i + 2])
            i += 2
        elif tok.startswith("--") or tok == "-h":
            opts.append(tok)
            i += 1
        else:
            loose.append(tok)
            i += 1
    return head + loose + opts


def run(argv, stdout=None):
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(_reorder_burnside_argv(list(argv)))
    except SystemExit as exc:
        return 2 if exc.code else 0
    out = []
    try:
        code = args.func(args, out)
    except BudgetExceededError as exc:
        print(f"error = {exc}", file=stdout)
        return 3
    except (CrossCheckError, AssertionError) as exc:
        print(f"error = {exc}", file=stdout)
        return 4
    except (TangleLabError, ValueError, OSError) as exc:
        print(f"error = {exc}", file=stdout)
        return 2
    for line in out:
        print(line, file=stdout)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
