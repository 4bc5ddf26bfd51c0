"""Compare the compiled and pure-Python distance kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Each case runs once per backend; results must agree, and the table reports
the best wall time over the repeats and the speedup.
"""

from __future__ import annotations

import argparse
import sys
import time

from rrcyclic import kernels
from rrcyclic.code import bch_code
from rrcyclic.dist import min_distance_exhaustive, min_weight_upto, weight_distribution
from rrcyclic.families import FamilyId, build_family


def _cases(quick: bool):
    t32 = build_family(FamilyId.T32, 4, 2).code
    t41 = build_family(FamilyId.T41, 2, 5).code
    t71 = build_family(FamilyId.T71, 2, 5).code
    t34 = build_family(FamilyId.T34, 8, 2).code
    out = [
        ("exhaustive d, BCH [31,16]_2", lambda impl: min_distance_exhaustive(bch_code(2, 31, 7, 1), impl).value),
        ("weight distribution, T71 [14,7]_2", lambda impl: weight_distribution(build_family(FamilyId.T71, 2, 3).code, impl)),
        ("search d<=3, T32 [30,26]_4", lambda impl: min_weight_upto(t32, 3, impl=impl, enumerate=False).value),
        ("search d<=4, T34 [18,14]_8", lambda impl: min_weight_upto(t34, 4, impl=impl, enumerate=False).value),
        ("search d<=6, T41 [62,46]_2", lambda impl: min_weight_upto(t41, 6, impl=impl, enumerate=False).value),
    ]
    if not quick:
        out.append(("search d<=8, T71 [62,31]_2",
                    lambda impl: min_weight_upto(t71, 8, impl=impl, enumerate=False).value))
    return out


def _best(fn, impl, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn(impl)
        best = min(best, time.perf_counter() - t)
    return best, result


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--quick", action="store_true", help="skip the slowest case")
    args = p.parse_args(argv)
    if not kernels.COMPILED_AVAILABLE:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1
    py, cc = kernels.backend("python"), kernels.backend("compiled")
    print(f"{'case':38s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, fn in _cases(args.quick):
        t_cc, r_cc = _best(fn, cc, args.repeat)
        t_py, r_py = _best(fn, py, 1 if t_cc > 0.5 else args.repeat)
        if r_cc != r_py:
            print(f"{name}: backends disagree ({r_py} vs {r_cc})", file=sys.stderr)
            return 1
        print(f"{name:38s} {t_py:10.4f} {t_cc:11.4f} {t_py / max(t_cc, 1e-9):7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
