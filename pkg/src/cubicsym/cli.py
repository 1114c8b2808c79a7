"""Batch front-end: parse monomial sets and cubic forms, run the group /
closure / smoothness / enumeration / theorem / case-table pipelines and
emit deterministic text or JSON reports.

Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage/parse error.
"""

import argparse
import json
import sys
from importlib import resources

from . import diaggroup, enumerator, lattice, pauli, smoothcert
from .cubicdomain import format_set, parse_set


def _data_path(name):
    return resources.files("cubicsym").joinpath("data", name)


def _parse_primes(text):
    return tuple(int(p) for p in text.split(","))


def cmd_group(args):
    A = parse_set(args.set)
    G = diaggroup.symmetry_group(A)
    closure = None if G.continuous else diaggroup.closure(A, G=G)
    if args.json:
        print(json.dumps(diaggroup.group_json(G, closure), indent=2,
                         sort_keys=True))
    else:
        print(f"group: {G.structure}")
        for d, exps in diaggroup.generator_matrices(G) if not G.continuous \
                else ():
            print(f"  generator: order {d}, exponents {list(exps)}")
        if closure is not None:
            print(f"closure: {format_set(closure)}")
    return 0


def cmd_closure(args):
    A = parse_set(args.set)
    closure = diaggroup.closure(A)
    if args.json:
        print(json.dumps({"closure": format_set(closure).split(", ")},
                         indent=2))
    else:
        print(format_set(closure))
    return 0


def cmd_smooth(args):
    primes = _parse_primes(args.primes)
    failures = 0
    count = 0
    with open(args.forms) as fh:
        for lineno, line in enumerate(fh, 1):
            F = smoothcert.parse_polynomial(line)
            if not F:
                continue
            count += 1
            verdict = smoothcert.certify_over_Q(F, primes)
            if not verdict:
                failures += 1
                print(f"line {lineno}: {verdict.status} "
                      f"(primes {list(verdict.primes)}, "
                      f"witness {verdict.witness})")
            elif not args.quiet:
                print(f"line {lineno}: CertifiedSmooth "
                      f"(p={verdict.primes[0]})")
    if count == 0:
        print("warning: no forms found", file=sys.stderr)
    print(f"total: {count} forms, {failures} not certified")
    return 0 if failures == 0 else 1


def cmd_enumerate(args):
    entries = enumerator.classify(max_added=args.max_added,
                                  primes=_parse_primes(args.primes),
                                  seed_base=args.seed, jobs=args.jobs)
    maximal = enumerator.maximal_groups(entries)
    print(enumerator.entries_to_json(entries, maximal))
    return 0


def cmd_theorem(args):
    with open(args.classification) as fh:
        doc = json.load(fh)
    maximal = [lattice.canonical_group(tuple(g))
               for g in doc["maximal_groups"]]
    reference = enumerator.load_reference_groups(
        args.reference or _data_path("theorem_groups.txt"))
    ok, missing, extra = enumerator.check_theorem(maximal, reference)
    for g in missing:
        print(f"missing maximal group: {g}")
    for g in extra:
        print(f"unexpected maximal group: {g}")
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_pauli(args):
    reports = pauli.verify_section3(
        seeds=args.seeds, prefix=None if args.case == "all" else args.case)
    failures = 0
    rows = []
    for r in reports:
        if isinstance(r, pauli.CaseReport):
            status = "ok" if r.ok else "FAIL"
            rows.append({"case": r.label, "group": list(r.computed),
                         "expected": list(r.expected),
                         "families": r.families, "dimension": r.dimension,
                         "smooth": bool(r.verdict), "status": status})
        else:
            status = "ok" if r.ok else "FAIL"
            rows.append({"case": r.label, "families": r.families,
                         "smooth_found": r.smooth_found, "status": status})
        failures += status == "FAIL"
    if args.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
    else:
        for row in rows:
            print(" ".join(f"{k}={v}" for k, v in row.items()))
        print(f"total: {len(rows)} checks, {failures} failing")
    return 0 if failures == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cubicsym",
        description="symmetry groups of cubic fourfolds: pipelines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="diagonal symmetry group of a set")
    p.add_argument("set", help="comma list of monomials, e.g. 'x0^3, x1^3'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("closure", help="monomial closure of a set")
    p.add_argument("set")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("smooth", help="certify a file of cubic forms")
    p.add_argument("forms", help="file with one form per line")
    p.add_argument("--primes", default="5,7,11,101,1009")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("enumerate", help="classify admissible sets")
    p.add_argument("--max-added", type=int, default=4)
    p.add_argument("--primes", default="101,1009")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("theorem", help="compare maximal groups to the "
                                       "reference list")
    p.add_argument("classification", help="JSON from `enumerate`")
    p.add_argument("--reference", default=None)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("pauli", help="verify the monomial-matrix case table")
    p.add_argument("case", choices=["A1", "A2", "A3", "B1", "B2", "B3",
                                    "C", "D", "all"])
    p.add_argument("--seeds", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pauli)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
