"""Command-line interface.

Exit codes: 0 success, 1 a verified claim was contradicted, 2 usage error,
3 the search budget ran out before a result was reached.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import classify
from .catalog import FORMATS, emit, table1
from .code import code_from_dict
from .cyclo import all_cosets, delta_h, lambda_bound
from .dist import DEFAULT_WMAX, ResourceError, default_budget, min_weight_upto
from .errors import InvalidParametersError, RRCyclicError
from .families import FAMILY_SUMMARY, FamilyId, build_family, verify_family

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_construct(args) -> int:
    r = build_family(args.family, args.q, args.m)
    d = r.to_dict()
    N, K, claim = r.predicted
    d["verdict"] = classify(r.code.length, r.code.dimension, claim.low, r.q).to_dict() if r.code.dimension else None
    print(r.label() if r.in_theorem_range else f"{r.label()} (outside the family's hypotheses)")
    _print_json(d)
    return EXIT_OK


def cmd_verify(args) -> int:
    r = build_family(args.family, args.q, args.m)
    rep = verify_family(r, budget=args.budget, wmax=args.wmax)
    print(f"{args.family} q={args.q} m={args.m}: {r.label()} computed [{r.code.length},{r.code.dimension},{rep.distance}]")
    for line in rep.lines():
        print("  " + line)
    if not rep.passed:
        return EXIT_FAIL
    return EXIT_BUDGET if rep.budget_exhausted else EXIT_OK


def cmd_mindist(args) -> int:
    try:
        data = json.loads(Path(args.code).read_text())
    except OSError as exc:
        raise InvalidParametersError(f"cannot read {args.code}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidParametersError(f"{args.code} is not valid JSON: {exc}") from None
    code = code_from_dict(data)
    try:
        res = min_weight_upto(code, wmax=args.wmax, budget=args.budget)
    except ResourceError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        _print_json({"N": code.length, "k": code.dimension, "distance": exc.partial.to_dict()})
        return EXIT_BUDGET
    _print_json({"N": code.length, "k": code.dimension, "distance": res.to_dict()})
    return EXIT_OK


def cmd_bounds(args) -> int:
    v = classify(args.n, args.k, args.d, args.q)
    print(v.optimality.value + (f" via {', '.join(v.via)}" if v.via else ""))
    _print_json(v.to_dict())
    return EXIT_OK


def cmd_table1(args) -> int:
    def report(rec):
        print(f"{rec.label()}: {rec.d_computed}", file=sys.stderr)

    progress = report if args.verify and args.progress else None
    recs = table1(verify=args.verify, budget=args.budget, progress=progress)
    text = emit(recs, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text)
    if any(r.contradicted for r in recs):
        return EXIT_FAIL
    if args.verify and any(not r.d_computed.is_exact for r in recs):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_cosets(args) -> int:
    for c in all_cosets(args.q, args.n):
        print(f"{c.leader}: {' '.join(map(str, c.members))}")
    return EXIT_OK


def cmd_deltah(args) -> int:
    h, d = delta_h(args.m)
    out = {"m": args.m, "h": h, "delta_h": d}
    if 11 <= args.m <= 19:
        lam, bound = lambda_bound(args.m)
        out["lambda"] = str(lam)
        out["lower_bound"] = str(bound)
    print(f"h={h}, delta={d}")
    _print_json(out)
    return EXIT_OK


def _budget(text: str) -> int:
    try:
        v = int(float(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid budget {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("budget must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rrcyclic", description="Repeated-root cyclic codes from nested BCH pairs.")
    sub = p.add_subparsers(dest="command", required=True)
    families = ", ".join(f"{f.value}: {FAMILY_SUMMARY[f]}" for f in FamilyId)

    def family_args(sp):
        sp.add_argument("--family", required=True, type=lambda s: FamilyId.parse(s).value,
                        help=f"family tag ({families})")
        sp.add_argument("--q", type=int, default=2, help="field order (default 2)")
        sp.add_argument("--m", type=int, required=True)

    sp = sub.add_parser("construct", help="build a family instance and print its record")
    family_args(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="build a family instance and check its promised parameters")
    family_args(sp)
    sp.add_argument("--budget", type=_budget, default=None, help="search budget in subset visits")
    sp.add_argument("--wmax", type=int, default=None, help="search weight cap (default: the claimed distance)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mindist", help="low-weight search on a code given as JSON {q, N, generator}")
    sp.add_argument("--code", required=True, help="path to a code JSON file")
    sp.add_argument("--wmax", type=int, default=DEFAULT_WMAX)
    sp.add_argument("--budget", type=_budget, default=None)
    sp.set_defaults(func=cmd_mindist)

    sp = sub.add_parser("bounds", help="classify (n, k, d, q) against the implemented bounds")
    for name in ("n", "k", "d", "q"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("table1", help="reproduce the table of constructed codes")
    sp.add_argument("--verify", action="store_true", help="compute and check every distance")
    sp.add_argument("--format", choices=sorted(FORMATS), default="csv")
    sp.add_argument("--out", default=None, help="output file (default stdout)")
    sp.add_argument("--budget", type=_budget, default=None)
    sp.add_argument("--progress", action="store_true", help="report each row on stderr")
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("cosets", help="list the q-cyclotomic cosets mod n")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_cosets)

    sp = sub.add_parser("deltah", help="h and delta_h for a prime m")
    sp.add_argument("--m", type=int, required=True)
    sp.set_defaults(func=cmd_deltah)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (RRCyclicError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
