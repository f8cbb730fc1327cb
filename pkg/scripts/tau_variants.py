#!/usr/bin/env python3
"""Compare the readings of tau in cases (16) and (17).

Each reading is run through verify_family; counterexamples are then
refereed by the independent root-counting oracle in tests/padic_oracle.py.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

from padic_oracle import local_shape  # noqa: E402
from quadrindex.cases import TAU_VARIANTS, get_case  # noqa: E402
from quadrindex.quartic_index import verify_family  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lifts", type=int, default=50)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    for variant in TAU_VARIANTS:
        for n in (16, 17):
            rep = verify_family(1, n, lifts_per_class=args.lifts, seed=args.seed, tau_variant=variant)
            claim = get_case(1, n, tau_variant=variant).shape
            refuted = undecided = 0
            for cx in rep.counterexamples:
                want = local_shape(cx.a, cx.b, cx.c, 2)
                if want is None:
                    undecided += 1
                elif want != claim:
                    refuted += 1
            print(
                f"{variant:>12} case ({n}): {rep.checked} lifts, {len(rep.counterexamples)} counterexamples, "
                f"oracle refutes claim on {refuted}, undecided {undecided}; shapes {dict(rep.shapes_seen)}"
            )


if __name__ == "__main__":
    main()
