#!/usr/bin/env python3
"""Residue classes outside each case list that still give the claimed shape."""

import argparse

from quadrindex.cases import T2_CASE3_MODULI, get_case, theorem1_cases, theorem2_cases
from quadrindex.quartic_index import probe_case


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--lifts", type=int, default=3)
    ap.add_argument("--show", type=int, default=12, help="hits to list per case")
    args = ap.parse_args()
    runs = [(1, n, {}) for n in range(1, 18)] + [(2, n, {}) for n in (1, 2, 4)]
    runs += [(2, 3, {"case3_modulus": m}) for m in T2_CASE3_MODULI]
    for thm, n, kw in runs:
        case = get_case(thm, n, **kw)
        table = theorem1_cases() if thm == 1 else theorem2_cases(**kw)
        others = [o for o in table if o.number != n]
        rep = probe_case(case, seed=args.seed, lifts=args.lifts, others=others)
        tag = f"T{thm}({n})" + (f" mod {kw['case3_modulus']}" if kw else "")
        if rep is None:
            print(f"{tag:>16}: no finite residue space to probe")
            continue
        more = " ..." if len(rep.hits) > args.show else ""
        print(
            f"{tag:>16}: scanned {rep.scanned}, covered {rep.covered}, skipped {rep.skipped}, "
            f"hits {len(rep.hits)} {rep.hits[: args.show]}{more}"
        )


if __name__ == "__main__":
    main()
