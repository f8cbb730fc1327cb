"""Command line: ``quadrindex analyze | verify | scan | examples``.

Exit codes: 0 ok, 1 usage or parse error, 2 reducible input, 3 internal
inconsistency (or, for ``examples``, a mismatch with the expected index).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from .cases import DEFAULT_CASE3_MODULUS, DEFAULT_TAU_VARIANT, T2_CASE3_MODULI, TAU_VARIANTS
from .exactint import DEFAULT_SF_BOUND, NotSquarefree, Squarefree
from .ore import DEFAULT_MAX_TRIES, FactorAnalysis
from .polyring import IntPoly, Quadrinomial
from .quartic_index import (
    AnalyzeOptions,
    CertifiedEisenstein,
    CertifiedFactorSearch,
    CertifiedModP,
    FamilyReport,
    FieldMonogenicPolyNot,
    IndexReport,
    InternalInconsistency,
    NotMonogenic,
    Reducible,
    analyze,
    verify_family,
)

SCHEMA_VERSION = "1.0"

EXIT_OK, EXIT_USAGE, EXIT_REDUCIBLE, EXIT_INCONSISTENT = 0, 1, 2, 3

# (a, b, c, expected i(K), expected shapes as {p: shape})
WORKED_EXAMPLES = (
    (4913, 867, 119, 2, {}),
    (25, 1125, 405, 3, {2: "[1^2, 2^1]"}),
    (6, 42, 975, 4, {3: "[1^4]"}),
    (21156911906816, 448, 287, 6, {}),
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; this CLI reserves 2 for reducible input."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class AnalyzeRequest:
    a: int
    b: int
    c: int
    primes: tuple[int, ...] = (2, 3)
    sf_bound: int = DEFAULT_SF_BOUND
    emit: str = "human"


def parse_int(text: str, name: str = "value") -> int:
    try:
        return int(str(text).strip())
    except ValueError:
        raise UsageError(f"{name} is not an integer: {text!r}") from None


def parse_primes(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(sorted({int(t) for t in text.split(",") if t.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None
    if not primes or any(p not in (2, 3) for p in primes):
        raise argparse.ArgumentTypeError("primes must be a non-empty subset of {2,3}")
    return primes


# ---------------------------------------------------------------------------
# JSON documents


def _poly_coeffs(F: IntPoly) -> list[str]:
    return [str(c) for c in F.coeffs]


def _factor_doc(fa: FactorAnalysis) -> dict:
    doc = {
        "phi_bar": list(fa.phi_bar.coeffs),
        "multiplicity": fa.multiplicity,
        "lift": _poly_coeffs(fa.lift) if fa.lift is not None else None,
        "points": [],
        "sides": [],
        "index": fa.index(),
    }
    if fa.polygon is not None:
        doc["points"] = [[pt.j, pt.v] for pt in fa.polygon.points]
        for sa in fa.sides:
            s = sa.side
            doc["sides"].append(
                {
                    "start": [s.start.j, s.start.v],
                    "end": [s.end.j, s.end.v],
                    "slope": s.slope_str(),
                    "degree": s.degree,
                    "ram_index": s.ram_index,
                    "residual": sa.residual.as_lists(),
                    "residual_factors": [
                        {"factor": [list(x.value) for x in psi], "multiplicity": n} for psi, n in sa.factors
                    ],
                }
            )
    return doc


def _irreducibility_doc(st) -> dict:
    if isinstance(st, CertifiedEisenstein):
        return {"status": "eisenstein", "primes": [st.p]}
    if isinstance(st, CertifiedModP):
        return {"status": "mod_p", "primes": list(st.primes)}
    if isinstance(st, CertifiedFactorSearch):
        return {"status": "factor_search"}
    if isinstance(st, Reducible):
        return {"status": "reducible", "factors": [_poly_coeffs(f) for f in st.factors]}
    return {"status": "uncertified", "reason": st.reason}


def _sf_name(sf) -> str:
    if isinstance(sf, Squarefree):
        return "squarefree"
    if isinstance(sf, NotSquarefree):
        return "not_squarefree"
    return "unknown"


def _verdict_doc(v) -> dict:
    if isinstance(v, NotMonogenic):
        return {"verdict": "not_monogenic", "p": v.p}
    if isinstance(v, FieldMonogenicPolyNot):
        s, t, p = v.theta
        return {
            "verdict": "field_monogenic_poly_not",
            "theta": {"s": s, "t": t, "p": p},
            "charpoly": _poly_coeffs(v.charpoly),
            "index_alpha_val": v.index_alpha_val,
            "squarefree": _sf_name(v.squarefree),
            "caveat": v.caveat,
        }
    return {"verdict": "inconclusive", "reason": v.reason}


def report_document(rep: IndexReport) -> dict:
    primes = []
    for p, res in sorted(rep.primes.items()):
        pa = res.analysis
        primes.append(
            {
                "p": p,
                "shape": res.shape.render() if res.shape is not None else None,
                "parts": [list(ef) for ef in res.shape.parts] if res.shape is not None else None,
                "nu_engine": res.nu_engine,
                "nu_theorem": res.nu_theorem,
                "nu": res.nu,
                "dedekind_p_maximal": res.dedekind_maximal,
                "shifted": pa.shifted if pa is not None else False,
                "factors": [_factor_doc(fa) for fa in pa.factors] if pa is not None else [],
                "error": res.error,
            }
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"a": str(rep.a), "b": str(rep.b), "c": str(rep.c)},
        "irreducibility": _irreducibility_doc(rep.irreducibility),
        "primes": primes,
        "nu2": rep.nu2,
        "nu3": rep.nu3,
        "i_K": rep.i_K,
        "matches": [
            {"theorem": m.theorem, "case": m.case, "prime": m.prime, "nu": m.nu, "subcase": m.subcase, "variant": m.variant}
            for m in rep.matches
        ],
        "monogenicity": _verdict_doc(rep.monogenicity),
        "caveats": list(rep.caveats),
        "inconsistent": rep.inconsistent,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# human output


def _irreducibility_text(st) -> str:
    if isinstance(st, CertifiedEisenstein):
        return f"irreducible (Eisenstein at {st.p})"
    if isinstance(st, CertifiedModP):
        return "irreducible (factorization mod " + ", ".join(map(str, st.primes)) + ")"
    if isinstance(st, CertifiedFactorSearch):
        return "irreducible (no linear or quadratic factor over Z)"
    if isinstance(st, Reducible):
        return "REDUCIBLE: " + " * ".join(f"({f})" for f in st.factors)
    return f"not certified ({st.reason})"


def _verdict_text(v) -> str:
    if isinstance(v, NotMonogenic):
        return f"K is not monogenic ({v.p} is a common index divisor)"
    if isinstance(v, FieldMonogenicPolyNot):
        s, t, p = v.theta
        return f"K is monogenic via theta = alpha^{s}/{p}^{t}; Z[alpha] is not (v_{p}(ind(alpha)) = {v.index_alpha_val})"
    return f"inconclusive: {v.reason}"


def render_human(rep: IndexReport) -> str:
    F = Quadrinomial(rep.a, rep.b, rep.c).poly
    out = [f"F = {F}", f"irreducibility: {_irreducibility_text(rep.irreducibility)}"]
    for p, res in sorted(rep.primes.items()):
        shape = res.shape.render() if res.shape is not None else "inconclusive"
        nu = "?" if res.nu is None else res.nu
        out.append(f"{p}O_K = {shape}    v_{p}(i(K)) = {nu}")
        if res.analysis is not None:
            for fa in res.analysis.factors:
                if fa.polygon is None:
                    continue
                sides = ", ".join(
                    f"({s.side.start.j},{s.side.start.v})-({s.side.end.j},{s.side.end.v}) slope {s.side.slope_str()}"
                    for s in fa.sides
                )
                out.append(f"  phi = {fa.lift}: {sides}")
    for m in rep.matches:
        if m.theorem == 3:
            out.append(f"generator criterion {m.label()} holds")
        else:
            out.append(f"case {m.label()} predicts v_{m.prime}(i(K)) = {m.nu}")
    if rep.i_K is not None:
        out.append(f"i(K) = {rep.i_K}")
    out.append(f"monogenicity: {_verdict_text(rep.monogenicity)}")
    for cav in rep.caveats:
        out.append(f"caveat: {cav}")
    return "\n".join(out)


def exit_code_for(rep: IndexReport) -> int:
    if rep.reducible:
        return EXIT_REDUCIBLE
    if rep.inconsistent:
        return EXIT_INCONSISTENT
    return EXIT_OK


# ---------------------------------------------------------------------------
# commands


def _opts(args) -> AnalyzeOptions:
    return AnalyzeOptions(primes=args.primes, sf_bound=args.sf_bound, max_tries=args.max_tries)


def request_from_args(args) -> AnalyzeRequest:
    return AnalyzeRequest(
        parse_int(args.a, "a"),
        parse_int(args.b, "b"),
        parse_int(args.c, "c"),
        primes=args.primes,
        sf_bound=args.sf_bound,
        emit="json" if args.json else "human",
    )


def cmd_analyze(args, out: TextIO) -> int:
    try:
        req = request_from_args(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rep = analyze(req.a, req.b, req.c, _opts(args))
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    print(dumps(report_document(rep)) if req.emit == "json" else render_human(rep), file=out)
    return exit_code_for(rep)


def family_summary(rep: FamilyReport) -> dict:
    doc = {
        "theorem": rep.theorem,
        "case": rep.case,
        "variant": rep.variant,
        "claimed_shape": rep.claimed_shape.render(),
        "claimed_nu": rep.claimed_nu,
        "classes": rep.classes,
        "lifts_per_class": rep.lifts_per_class,
        "checked": rep.checked,
        "resampled_reducible": rep.resampled,
        "empty_classes": [list(c) for c in rep.empty_classes],
        "shapes_seen": dict(rep.shapes_seen),
        "subcases": dict(rep.subcases),
        "counterexamples": [
            {"a": str(cx.a), "b": str(cx.b), "c": str(cx.c), "class": list(cx.cls), "reason": cx.reason}
            for cx in rep.counterexamples
        ],
        "passed": rep.passed,
    }
    if rep.probe is not None:
        doc["probe"] = {
            "scanned": rep.probe.scanned,
            "covered_by_other_cases": rep.probe.covered,
            "hits": [list(h) for h in rep.probe.hits],
            "skipped": rep.probe.skipped,
        }
    return doc


def cmd_verify(args, out: TextIO) -> int:
    try:
        rep = verify_family(
            args.theorem,
            args.case,
            lifts_per_class=args.lifts,
            seed=args.seed,
            tau_variant=args.tau_variant,
            case3_modulus=args.case3_modulus,
            probe=args.probe,
            workers=args.workers,
            max_tries=args.max_tries,
        )
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(dumps(family_summary(rep)), file=out)
    else:
        tag = "PASS" if rep.passed else "FAIL"
        variant = f" [{rep.variant}]" if rep.variant else ""
        print(
            f"{tag} theorem {rep.theorem} case {rep.case}{variant}: {rep.classes} classes, "
            f"{rep.lifts_per_class} lifts per class, {rep.checked} checked, "
            f"{len(rep.counterexamples)} counterexamples; claim {rep.claimed_shape} with v = {rep.claimed_nu}",
            file=out,
        )
        if rep.empty_classes:
            print(f"  classes without witnesses: {rep.empty_classes}", file=out)
        if rep.subcases:
            print(f"  subcases: {dict(sorted(rep.subcases.items()))}", file=out)
        for cx in rep.counterexamples[:10]:
            print(f"  counterexample ({cx.a}, {cx.b}, {cx.c}) class {cx.cls}: {cx.reason}", file=out)
        if rep.probe is not None:
            pr = rep.probe
            print(
                f"  probe: {pr.scanned} classes outside the list, {pr.covered} covered by other cases, "
                f"{len(pr.hits)} giving the claimed shape",
                file=out,
            )
            if pr.hits:
                print(f"  probe hits: {pr.hits[:20]}{' ...' if len(pr.hits) > 20 else ''}", file=out)
    return EXIT_OK if rep.passed else EXIT_INCONSISTENT


def cmd_scan(args, out: TextIO) -> int:
    try:
        src = open(args.input, newline="", encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sink = open(args.output, "w", encoding="utf-8") if args.output else out
    status = EXIT_OK
    try:
        with src:
            reader = csv.reader(src)
            header = next(reader, None)
            if header is None or [h.strip().lower() for h in header] != ["a", "b", "c"]:
                print(f"error: {args.input}: header must be a,b,c", file=sys.stderr)
                return EXIT_USAGE
            opts = _opts(args)
            for lineno, row in enumerate(reader, start=2):
                if not row or all(not x.strip() for x in row):
                    continue
                try:
                    if len(row) != 3:
                        raise UsageError(f"expected 3 fields, got {len(row)}")
                    a, b, c = (parse_int(x, n) for x, n in zip(row, "abc"))
                except UsageError as exc:
                    print(f"{args.input}:{lineno}: skipped: {exc}", file=sys.stderr)
                    continue
                try:
                    rep = analyze(a, b, c, opts)
                except InternalInconsistency as exc:
                    print(f"{args.input}:{lineno}: internal inconsistency: {exc}", file=sys.stderr)
                    status = EXIT_INCONSISTENT
                    continue
                if rep.inconsistent:
                    status = EXIT_INCONSISTENT
                sink.write(dumps(report_document(rep)) + "\n")
    finally:
        if sink is not out:
            sink.close()
    return status


def run_examples() -> list[dict]:
    rows = []
    for a, b, c, expected, shapes in WORKED_EXAMPLES:
        rep = analyze(a, b, c)
        got_shapes = {p: rep.primes[p].shape.render() for p in shapes if rep.primes[p].shape is not None}
        ok = rep.i_K == expected and all(got_shapes.get(p) == s for p, s in shapes.items())
        rows.append({"a": str(a), "b": str(b), "c": str(c), "expected_i_K": expected, "i_K": rep.i_K, "agree": ok})
    return rows


def cmd_examples(args, out: TextIO) -> int:
    rows = run_examples()
    if args.json:
        print(dumps({"schema_version": SCHEMA_VERSION, "examples": rows}), file=out)
    else:
        print(f"{'a':>16} {'b':>6} {'c':>6}  expected  computed", file=out)
        for r in rows:
            tag = "PASS" if r["agree"] else "FAIL"
            print(f"{r['a']:>16} {r['b']:>6} {r['c']:>6}  {r['expected_i_K']:>8}  {str(r['i_K']):>8}  {tag}", file=out)
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_INCONSISTENT


# ---------------------------------------------------------------------------


def _add_analysis_flags(p: argparse.ArgumentParser):
    p.add_argument("--primes", type=parse_primes, default=(2, 3), help="comma separated subset of 2,3")
    p.add_argument("--sf-bound", type=int, default=DEFAULT_SF_BOUND, help="trial division bound for square-freeness")
    p.add_argument("--max-tries", type=int, default=DEFAULT_MAX_TRIES, help="linear lifts tried per inseparable factor")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadrindex", description="Index of x^4 + a x^3 + b x + c at the primes 2 and 3.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="analyze one quadrinomial")
    # strings so that values like -4 and 30-digit integers pass through untouched
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)
    p.add_argument("-c", required=True)
    p.add_argument("--json", action="store_true")
    _add_analysis_flags(p)

    p = sub.add_parser("verify", help="check a case family on random lifts")
    p.add_argument("--theorem", type=int, required=True)
    p.add_argument("--case", type=int, required=True)
    p.add_argument("--lifts", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tau-variant", choices=TAU_VARIANTS, default=DEFAULT_TAU_VARIANT)
    p.add_argument("--case3-modulus", type=int, choices=T2_CASE3_MODULI, default=DEFAULT_CASE3_MODULUS)
    p.add_argument("--probe", action=argparse.BooleanOptionalAction, default=True, help="completeness probe")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-tries", type=int, default=DEFAULT_MAX_TRIES)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scan", help="analyze every row of a CSV file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="JSON lines file (default: stdout)")
    _add_analysis_flags(p)

    p = sub.add_parser("examples", help="reproduce the four worked examples")
    p.add_argument("--json", action="store_true")
    return parser


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "scan": cmd_scan, "examples": cmd_examples}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
