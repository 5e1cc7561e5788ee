"""Command-line frontend: run named verification suites, print bases and
relation dumps, and derive coset data for individual flag generators.

Exit codes: 0 when every selected check passes, 1 when a check fails, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import flagext, qpair, report, suites


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qflag3",
        description="exact verification suites for the quantum exterior "
                    "algebra of the full quantum flag manifold of SU_q(3)")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("suite", choices=("all",) + suites.SUITE_NAMES)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", metavar="PATH",
                        help="also write the report to this file")
    verify.add_argument("--q-at-one", action="store_true",
                        help="run the classical-limit checks instead")

    basis = sub.add_parser("basis", help="print the monomial basis of a degree")
    basis.add_argument("--degree", type=int, required=True)
    basis.add_argument("--graded", action="store_true",
                       help="use the associated graded system")

    relations = sub.add_parser("relations", help="dump the rewrite rules")
    relations.add_argument("--dump", action="store_true")
    relations.add_argument("--graded", action="store_true")

    derive = sub.add_parser("derive", help="apply the coset maps to a generator")
    derive.add_argument("map", choices=("omega", "coset"))
    derive.add_argument("--generator", required=True, metavar="NAME",
                        help="flag generator, e.g. z1_22 or z2_31")
    return parser


def _parse_generator(name: str):
    match = re.fullmatch(r"z([12])_([123])([123])", name)
    if match is None:
        raise ValueError(
            "generator must look like z<p>_<a><b> with p in 1..2, a,b in 1..3")
    return tuple(int(g) for g in match.groups())


def _cmd_verify(args) -> int:
    if args.q_at_one:
        reports = suites.run_all(classical=True) if args.suite == "all" \
            else [suites.run_suite("classical")]
    elif args.suite == "all":
        reports = suites.run_all()
    else:
        reports = [suites.run_suite(args.suite)]
    rendered = report.emit(reports, args.format)
    print(rendered)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(rendered + "\n")
    return 0 if all(r.overall for r in reports) else 1


def _cmd_basis(args) -> int:
    algebra = flagext.associated_graded() if args.graded else flagext.build_relations()
    if args.degree < 0:
        print("degree must be nonnegative", file=sys.stderr)
        return 2
    for word in algebra.system.irreducible_words(args.degree):
        print(algebra.alphabet.render_word(word))
    return 0


def _cmd_relations(args) -> int:
    algebra = flagext.associated_graded() if args.graded else flagext.build_relations()
    print(algebra.system.dump_rules())
    return 0


def _cmd_derive(args) -> int:
    try:
        p, a, b = _parse_generator(args.generator)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    generator = qpair.plus_part(qpair.flag_generator(p, a, b))
    if args.map == "coset":
        print(qpair.coset(generator).render())
    else:
        print(qpair.omega_render(qpair.omega(generator)))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "basis":
        return _cmd_basis(args)
    if args.command == "relations":
        return _cmd_relations(args)
    if args.command == "derive":
        return _cmd_derive(args)
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
