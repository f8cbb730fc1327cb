#!/usr/bin/env python3
"""Recompute the four worked examples and print each full analysis."""

import argparse
import time

from quadrindex.cli import WORKED_EXAMPLES, render_human
from quadrindex.quartic_index import analyze


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quiet", action="store_true", help="one line per example")
    args = ap.parse_args()
    ok = True
    t0 = time.perf_counter()
    for a, b, c, expected, shapes in WORKED_EXAMPLES:
        rep = analyze(a, b, c)
        agree = rep.i_K == expected and all(str(rep.shapes()[p]) == s for p, s in shapes.items())
        ok &= agree
        if args.quiet:
            print(f"({a}, {b}, {c}): i(K) = {rep.i_K}, expected {expected}  {'ok' if agree else 'MISMATCH'}")
        else:
            print(render_human(rep))
            print(f"expected i(K) = {expected}: {'ok' if agree else 'MISMATCH'}\n")
    print(f"total {time.perf_counter() - t0:.3f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
