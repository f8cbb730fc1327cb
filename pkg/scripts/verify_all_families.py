#!/usr/bin/env python3
"""Run verify_family on every case of both theorems and tabulate the outcome."""

import argparse
import json
import time

from quadrindex.cases import DEFAULT_CASE3_MODULUS, DEFAULT_TAU_VARIANT, T2_CASE3_MODULI, TAU_VARIANTS
from quadrindex.cli import family_summary
from quadrindex.quartic_index import verify_family

CASES = [(1, n) for n in range(1, 18)] + [(2, n) for n in range(1, 5)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lifts", type=int, default=50)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--tau-variant", choices=TAU_VARIANTS, default=DEFAULT_TAU_VARIANT)
    ap.add_argument("--case3-modulus", type=int, choices=T2_CASE3_MODULI, default=DEFAULT_CASE3_MODULUS)
    ap.add_argument("--probe", action="store_true", help="also run the completeness probe")
    ap.add_argument("--json", help="write per-case summaries to this file")
    args = ap.parse_args()

    docs, failed = [], 0
    print(f"{'case':>8} {'classes':>7} {'checked':>7} {'cx':>4} {'probe hits':>10}  {'sec':>5}  shapes")
    for thm, n in CASES:
        t0 = time.perf_counter()
        rep = verify_family(
            thm,
            n,
            lifts_per_class=args.lifts,
            seed=args.seed,
            tau_variant=args.tau_variant,
            case3_modulus=args.case3_modulus,
            probe=args.probe,
            workers=args.workers,
        )
        dt = time.perf_counter() - t0
        failed += not rep.passed
        hits = len(rep.probe.hits) if rep.probe is not None else "-"
        shapes = ", ".join(f"{s} x{k}" for s, k in rep.shapes_seen.items())
        print(f"{f'T{thm}({n})':>8} {rep.classes:>7} {rep.checked:>7} {len(rep.counterexamples):>4} {hits:>10}  {dt:5.1f}  {shapes}")
        docs.append(family_summary(rep))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(docs, fh, indent=1)
    print(f"{len(CASES) - failed}/{len(CASES)} families passed")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
