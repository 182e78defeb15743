"""Command-line front end: ``stte <subcommand> ...`` (or ``python -m stte``).

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import catalogue
from .cohomology import cohomology3
from .cubecomplex import enumerate_permitted4_bruteforce, enumerate_permitted4_propagate
from .quantum import Cocycle, check_qte
from .rmap import (
    RMap,
    image_cardinality,
    is_bijective,
    parse_rmap,
    satisfies_stte,
    sigma1_conjugate,
    sigma2_conjugate,
)
from .search import enumerate_solutions, histogram_by_image_cardinality, orbit_decomposition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rmap_from_args(parts) -> RMap:
    try:
        return parse_rmap(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _id_lookup():
    ref = catalogue.load_reference()
    return {e.rmap.code: e.id for e in ref}


def _label(R: RMap, ids) -> str:
    rid = ids.get(R.code)
    name = f"R_{rid}" if rid is not None else "(not in catalogue)"
    return f"{name} {R} code={R.code:#08x}"


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def cmd_enumerate(args) -> int:
    solutions = enumerate_solutions(jobs=args.jobs)
    reports = catalogue.analyze(solutions, jobs=args.jobs)
    records = catalogue.build_records(solutions, reports, catalogue.load_reference())
    emit = catalogue.emit_json if args.format == "json" else catalogue.emit_text
    text = emit(records, args.out)
    if args.out is None:
        sys.stdout.write(text)
    else:
        hist = histogram_by_image_cardinality(solutions)
        print(f"{len(solutions)} solutions written to {args.out}; by image cardinality: {hist}")
    return EXIT_OK


def cmd_verify(args) -> int:
    R = _rmap_from_args(args.r)
    ok = satisfies_stte(R)
    ids = _id_lookup()
    print(_label(R, ids))
    print(f"solution: {'yes' if ok else 'no'}")
    print(f"image cardinality: {image_cardinality(R)}")
    print(f"bijective: {'yes' if is_bijective(R) else 'no'}")
    print(f"sigma1: {_label(sigma1_conjugate(R), ids)}")
    print(f"sigma2: {_label(sigma2_conjugate(R), ids)}")
    return EXIT_OK if ok else EXIT_FAIL


def _selected(args) -> list[RMap]:
    if args.all:
        return list(enumerate_solutions(jobs=getattr(args, "jobs", 1)))
    if getattr(args, "code", None) is not None:
        return [_rmap_from_args([args.code])]
    if not args.r:
        raise UsageError("name a solution (three polynomials or a code) or pass --all")
    return [_rmap_from_args(args.r)]


def cmd_cohomology(args) -> int:
    solutions = _selected(args)
    for R in solutions:
        if not satisfies_stte(R):
            print(f"{R} is not a solution", file=sys.stderr)
            return EXIT_FAIL
    reports = catalogue.analyze(solutions, jobs=args.jobs)
    ids = _id_lookup()
    for R in solutions:
        rep = reports[R.code]
        print(_label(R, ids))
        print(f"  ker d3 rank {rep.ker_rank}, basis {[list(v) for v in rep.kernel.basis]}")
        print(f"  im d2 generator {list(rep.im_generator)}")
        print(f"  H3 = {rep.h3}; H3 / (im d2 + Z v1) = {rep.h3_reduced}; nontrivial: {rep.nontrivial}")
    if args.out:
        records = catalogue.build_records(solutions, reports, catalogue.load_reference())
        catalogue.emit_json(records, args.out)
    return EXIT_OK


def cmd_orbits(args) -> int:
    ids = _id_lookup()
    for n, orbit in enumerate(orbit_decomposition(enumerate_solutions(jobs=args.jobs)), 1):
        names = ", ".join(f"R_{ids.get(R.code, '?')}" for R in orbit.members)
        edges = "; ".join(
            f"R_{ids.get(a.code, '?')} -{label}- R_{ids.get(b.code, '?')}" for a, b, label in orbit.edges
        )
        fixed = ",".join(sorted(orbit.self_symmetries)) or "-"
        print(f"{n:3d} card={image_cardinality(orbit.members[0])} size={len(orbit)} [{names}] edges: {edges or 'none'} fixed: {fixed}")
    return EXIT_OK


def _cocycles(R: RMap, choice: str, t: Fraction) -> list[Cocycle | None]:
    if choice == "trivial":
        return [None]
    if choice == "kernel-basis":
        return [Cocycle(v, t) for v in cohomology3(R).kernel.basis]
    try:
        w = tuple(int(a) for a in choice.split(","))
    except ValueError:
        raise UsageError(f"bad cocycle {choice!r}") from None
    if len(w) != 8:
        raise UsageError("a cocycle needs 8 comma-separated integers")
    return [Cocycle(w, t)]


def cmd_quantum(args) -> int:
    try:
        Cocycle((0,) * 8, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ids = _id_lookup()
    failures = 0
    for R in _selected(args):
        try:
            cocycles = _cocycles(R, args.cocycle, args.t)
            results = [(c, check_qte(R, c)) for c in cocycles]
        except ValueError as exc:
            print(f"{_label(R, ids)}: {exc}")
            failures += 1
            continue
        for c, ok in results:
            failures += not ok
            what = "trivial" if c is None else f"w={list(c.w)} t={c.t}"
            print(f"{_label(R, ids)} [{what}]: {'holds' if ok else 'FAILS'}")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_compare(args) -> int:
    try:
        ref = catalogue.load_reference(args.ref)
    except (OSError, catalogue.CatalogueError) as exc:
        print(f"reference: {exc}", file=sys.stderr)
        return EXIT_FAIL
    solutions = enumerate_solutions(jobs=args.jobs)
    reports = catalogue.analyze(solutions, jobs=args.jobs)
    diff = catalogue.compare(solutions, ref, reports)
    print(f"computed {len(solutions)} solutions, reference {len(ref)} entries")
    print(diff)
    status = EXIT_OK if diff.ok else EXIT_FAIL
    if args.oracle_4cube:
        by_id = {e.id: e for e in ref}
        try:
            wanted = [int(s) for s in args.oracle_4cube.split(",") if s.strip()]
        except ValueError:
            raise UsageError(f"bad id list {args.oracle_4cube!r}") from None
        for rid in wanted:
            if rid not in by_id:
                raise UsageError(f"no reference entry {rid}")
            R = by_id[rid].rmap
            same = enumerate_permitted4_bruteforce(R) == enumerate_permitted4_propagate(R)
            print(f"4-cube oracle R_{rid}: {'agrees' if same else 'DIFFERS'}")
            if not same:
                status = EXIT_FAIL
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stte", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="find and classify all solutions")
    e.add_argument("--out")
    e.add_argument("--format", choices=("json", "text"), default="json")
    e.add_argument("--jobs", type=_positive_int, default=1)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="check one R-operator")
    v.add_argument("r", nargs="+", metavar="R", help="three polynomials or one 24-bit code")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cohomology", help="3-cohomology of solutions")
    c.add_argument("r", nargs="*", metavar="R")
    c.add_argument("--code")
    c.add_argument("--all", action="store_true")
    c.add_argument("--out")
    c.add_argument("--jobs", type=_positive_int, default=1)
    c.set_defaults(func=cmd_cohomology)

    o = sub.add_parser("orbits", help="sigma orbits of the solution set")
    o.add_argument("--jobs", type=_positive_int, default=1)
    o.set_defaults(func=cmd_orbits)

    q = sub.add_parser("quantum-check", help="quantum tetrahedron equation")
    q.add_argument("r", nargs="*", metavar="R")
    q.add_argument("--all", action="store_true")
    q.add_argument("--cocycle", default="trivial", help="trivial, kernel-basis or w1,...,w8")
    q.add_argument("--t", type=_rational, default=Fraction(2))
    q.set_defaults(func=cmd_quantum)

    r = sub.add_parser("compare-reference", help="full pipeline against the bundled catalogue")
    r.add_argument("--ref")
    r.add_argument("--oracle-4cube", metavar="IDS", help="comma-separated catalogue ids")
    r.add_argument("--jobs", type=_positive_int, default=1)
    r.set_defaults(func=cmd_compare)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"stte: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
