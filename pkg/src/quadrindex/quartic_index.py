"""Field index of K = Q(alpha), alpha a root of x^4 + a x^3 + b x + c.

For a quartic field only 2 and 3 can be common index divisors, and the
splitting shape of p determines v_p(i(K)) through Engstrom's table.  The
analyzer below runs the Ore engine at p = 2, 3, maps the shapes through
that table, runs the case matchers as an independent prediction, and
reports every disagreement instead of reconciling it.
"""

from __future__ import annotations

import logging
import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .cases import (
    DEFAULT_CASE3_MODULUS,
    DEFAULT_TAU_VARIANT,
    FamilyCase,
    SynthesisError,
    TheoremMatch,
    get_case,
    theorem1_cases,
    theorem2_cases,
)
from .exactint import (
    DEFAULT_SF_BOUND,
    INF,
    NotSquarefree,
    SquarefreeStatus,
    UnknownBeyondBound,
    divisors,
    primes_up_to,
    solve_diophantine_st,
    squarefree_check,
    unit_part,
    val_p,
)
from .finitefield import factor_mod_p
from .newton import lattice_index, principal_polygon
from .ore import (
    DEFAULT_MAX_TRIES,
    PrimeAnalysis,
    SplittingShape,
    analyze_prime,
    dedekind_p_maximal,
)
from .polyring import IntPoly, Quadrinomial, discriminant, eisenstein_at, minpoly_scaled_power, phi_expand

log = logging.getLogger(__name__)

EISENSTEIN_PRIME_LIMIT = 100
MOD_P_LIMIT = 31
FACTOR_SEARCH_LIMIT = 10**12
THEOREM3_PRIME_LIMIT = 10**4


class InternalInconsistency(AssertionError):
    """Two computations that must agree did not; points at a bug."""


# ---------------------------------------------------------------------------
# Engstrom's table


@dataclass(frozen=True)
class EngstromRow:
    shape: Optional[SplittingShape]  # None is the catch-all
    nu2: int
    nu3: int


ENGSTROM_TABLE = (
    EngstromRow(SplittingShape([(1, 1)] * 4), 2, 1),
    EngstromRow(SplittingShape([(1, 1), (1, 1), (2, 1)]), 1, 0),
    EngstromRow(SplittingShape([(1, 2), (1, 2)]), 1, 0),
    EngstromRow(None, 0, 0),
)


def engstrom_nu(shape: SplittingShape, p: int) -> int:
    """v_p(i(K)) for a quartic field in which p has the given shape."""
    if shape.total != 4:
        raise ValueError(f"shape {shape} has total {shape.total}, expected 4")
    if p not in (2, 3):
        return 0
    for row in ENGSTROM_TABLE:
        if row.shape is None or row.shape == shape:
            return row.nu2 if p == 2 else row.nu3
    raise AssertionError("catch-all row missing")


# ---------------------------------------------------------------------------
# matchers


def match_theorem1(a: int, b: int, c: int, tau_variant: str = DEFAULT_TAU_VARIANT) -> list[TheoremMatch]:
    return [m for case in theorem1_cases(tau_variant) if (m := case.match(a, b, c)) is not None]


def match_theorem2(a: int, b: int, c: int, case3_modulus: int = DEFAULT_CASE3_MODULUS) -> list[TheoremMatch]:
    return [m for case in theorem2_cases(case3_modulus) if (m := case.match(a, b, c)) is not None]


# ---------------------------------------------------------------------------
# irreducibility


@dataclass(frozen=True)
class CertifiedEisenstein:
    p: int


@dataclass(frozen=True)
class CertifiedModP:
    primes: tuple[int, ...]  # a single prime when F is irreducible mod p


@dataclass(frozen=True)
class CertifiedFactorSearch:
    """No rational root and no quadratic factor over Z."""


@dataclass(frozen=True)
class Reducible:
    factors: tuple[IntPoly, ...]


@dataclass(frozen=True)
class Uncertified:
    reason: str = ""


IrreducibilityStatus = Union[CertifiedEisenstein, CertifiedModP, CertifiedFactorSearch, Reducible, Uncertified]


def _achievable_degrees(pattern: Sequence[int]) -> set[int]:
    sums = {0}
    for d in pattern:
        sums |= {s + d for s in sums}
    return {s for s in sums if 0 < s < sum(pattern)}


def _factor_search(F: IntPoly) -> Optional[tuple[IntPoly, ...]]:
    """Exact search for a linear or quadratic factor of monic x^4 + a x^3 + b x + c, c != 0."""
    a, b, c = F[3], F[1], F[0]
    divs = divisors(c)
    for d in divs:
        for r in (d, -d):
            if F(r) == 0:
                q, _ = F.divmod_monic(IntPoly.x_minus(r))
                return IntPoly.x_minus(r), q
    # (x^2 + u x + v)(x^2 + w x + z): vz = c, u + w = a, uw + v + z = 0, uz + vw = b
    for d in divs:
        for v in (d, -d):
            z = c // v
            disc = a * a + 4 * (v + z)
            if disc < 0:
                continue
            s = math.isqrt(disc)
            if s * s != disc or (a + s) % 2:
                continue
            for u in {(a + s) // 2, (a - s) // 2}:
                w = a - u
                if u * z + v * w == b:
                    return IntPoly((v, u, 1)), IntPoly((z, w, 1))
    return None


def certify_irreducible(a: int, b: int, c: int) -> IrreducibilityStatus:
    F = Quadrinomial(a, b, c).poly
    if c == 0:
        return Reducible((IntPoly((0, 1)), IntPoly((b, 0, a, 1))))
    for p in primes_up_to(EISENSTEIN_PRIME_LIMIT):
        if c % p == 0 and eisenstein_at(F, p):
            return CertifiedEisenstein(p)
    possible = {1, 2, 3}
    used = []
    for p in primes_up_to(MOD_P_LIMIT):
        pattern = factor_mod_p(F, p).degree_pattern()
        if len(pattern) == 1 and pattern[0] == 4:
            return CertifiedModP((p,))
        reach = _achievable_degrees(pattern)
        if possible & reach != possible:
            used.append(p)
            possible &= reach
        if not possible:
            return CertifiedModP(tuple(used))
    if abs(c) > FACTOR_SEARCH_LIMIT:
        return Uncertified(f"|c| > {FACTOR_SEARCH_LIMIT} and no mod-p certificate")
    found = _factor_search(F)
    if found is not None:
        return Reducible(found)
    return CertifiedFactorSearch()


# ---------------------------------------------------------------------------
# monogenicity


@dataclass(frozen=True)
class NotMonogenic:
    p: int  # a common index divisor


@dataclass(frozen=True)
class FieldMonogenicPolyNot:
    theta: tuple[int, int, int]  # (s, t, p): theta = alpha^s / p^t
    charpoly: IntPoly
    index_alpha_val: int  # v_p(ind(alpha))
    squarefree: SquarefreeStatus
    caveat: Optional[str] = None


@dataclass(frozen=True)
class Inconclusive:
    reason: str


MonogenicityVerdict = Union[NotMonogenic, FieldMonogenicPolyNot, Inconclusive]


def check_theorem3(a: int, b: int, c: int, p: int, sf_bound: int = DEFAULT_SF_BOUND) -> MonogenicityVerdict:
    """K monogenic while Z[alpha] is not, certified by theta = alpha^s / p^t.

    Hypotheses: min(4 v_p(a), 4/3 v_p(b)) > v_p(c) > 2, v_p(c) odd and the
    p-free part of disc(F) square free.
    """
    vc = val_p(c, p)
    if vc is INF:
        return Inconclusive("c = 0")
    if not vc > 2:
        return Inconclusive(f"v_{p}(c) = {vc} is not > 2")
    if vc % 2 == 0:
        return Inconclusive(f"v_{p}(c) = {vc} is even")
    if not 4 * val_p(a, p) > vc:
        return Inconclusive(f"4 v_{p}(a) <= v_{p}(c)")
    if not 4 * val_p(b, p) > 3 * vc:
        return Inconclusive(f"(4/3) v_{p}(b) <= v_{p}(c)")
    F = Quadrinomial(a, b, c).poly
    D = discriminant(F)
    Dp = unit_part(D, p)
    sf = squarefree_check(abs(Dp), sf_bound)
    if isinstance(sf, NotSquarefree):
        return Inconclusive(f"D_{p} is divisible by {sf.witness}^2")
    s, t = solve_diophantine_st(vc)
    M = minpoly_scaled_power(F, s, t, p)
    if not eisenstein_at(M, p):
        raise InternalInconsistency(f"charpoly of alpha^{s}/{p}^{t} is not {p}-Eisenstein: {M}")
    expected = 3 * (vc - 1) // 2
    got = lattice_index(principal_polygon(phi_expand(F, IntPoly((0, 1))), p))
    if got != expected:
        raise InternalInconsistency(f"lattice index {got} != 3(v_p(c)-1)/2 = {expected}")
    caveat = None
    if isinstance(sf, UnknownBeyondBound):
        caveat = f"square-freeness of D_{p} undecided beyond trial bound {sf.bound}"
    return FieldMonogenicPolyNot((s, t, p), M, expected, sf, caveat)


# ---------------------------------------------------------------------------
# analyzer


@dataclass
class PrimeResult:
    p: int
    analysis: Optional[PrimeAnalysis]
    nu_engine: Optional[int]
    nu_theorem: Optional[int]
    nu: Optional[int]
    dedekind_maximal: Optional[bool]
    error: Optional[str] = None

    @property
    def shape(self) -> Optional[SplittingShape]:
        return self.analysis.shape if self.analysis is not None else None


@dataclass
class IndexReport:
    a: int
    b: int
    c: int
    nu2: Optional[int]
    nu3: Optional[int]
    primes: dict[int, PrimeResult]
    matches: list[TheoremMatch]
    monogenicity: MonogenicityVerdict
    irreducibility: IrreducibilityStatus
    caveats: list[str] = field(default_factory=list)
    inconsistent: bool = False

    @property
    def i_K(self) -> Optional[int]:
        if self.nu2 is None or self.nu3 is None:
            return None
        return 2**self.nu2 * 3**self.nu3

    @property
    def reducible(self) -> bool:
        return isinstance(self.irreducibility, Reducible)

    def shapes(self) -> dict[int, Optional[SplittingShape]]:
        return {p: r.shape for p, r in self.primes.items()}


@dataclass(frozen=True)
class AnalyzeOptions:
    primes: tuple[int, ...] = (2, 3)
    sf_bound: int = DEFAULT_SF_BOUND
    max_tries: int = DEFAULT_MAX_TRIES
    tau_variant: str = DEFAULT_TAU_VARIANT
    case3_modulus: int = DEFAULT_CASE3_MODULUS


def _analyze_prime(F: IntPoly, p: int, predicted: list[int], opts: AnalyzeOptions, caveats: list[str]) -> tuple[PrimeResult, bool]:
    bad = False
    try:
        pa = analyze_prime(F, p, opts.max_tries)
    except (ValueError, ArithmeticError) as exc:
        pa, err = None, str(exc)
    else:
        err = None
    nu_engine = engstrom_nu(pa.shape, p) if pa is not None and pa.shape is not None else None
    nu_theorem = None
    if predicted:
        if len(set(predicted)) > 1:
            caveats.append(f"p={p}: matched cases predict different values {sorted(set(predicted))}")
        nu_theorem = predicted[0]
    ded = dedekind_p_maximal(F, p)
    if nu_engine is not None:
        nu = nu_engine
        if nu_theorem is not None and nu_theorem != nu_engine:
            caveats.append(f"p={p}: engine gives v_p(i(K)) = {nu_engine}, matched case predicts {nu_theorem}")
    elif nu_theorem is not None:
        nu = nu_theorem
        caveats.append(f"p={p}: engine inconclusive; using the matched case's value {nu_theorem}")
    elif ded:
        nu = 0  # p does not divide ind(alpha), hence not i(K)
    else:
        nu = None
        caveats.append(f"p={p}: engine inconclusive and Z[alpha] is not p-maximal")
    if nu and ded:
        caveats.append(f"p={p}: v_p(i(K)) = {nu} but Dedekind says Z[alpha] is p-maximal")
        bad = True
    if pa is not None and pa.shape is not None and (pa.index_lower_bound() > 0) == ded:
        caveats.append(f"p={p}: polygon index {pa.index_lower_bound()} disagrees with Dedekind ({ded})")
        bad = True
    if err:
        caveats.append(f"p={p}: engine error: {err}")
    return PrimeResult(p, pa, nu_engine, nu_theorem, nu, ded, err), bad


def analyze(a: int, b: int, c: int, opts: Optional[AnalyzeOptions] = None) -> IndexReport:
    opts = opts or AnalyzeOptions()
    caveats: list[str] = []
    irr = certify_irreducible(a, b, c)
    matches = match_theorem1(a, b, c, opts.tau_variant) + match_theorem2(a, b, c, opts.case3_modulus)
    if isinstance(irr, Reducible):
        caveats.append("F is reducible; the index of K is undefined")
        verdict = Inconclusive("reducible polynomial")
        return IndexReport(a, b, c, None, None, {}, matches, verdict, irr, caveats)
    if discriminant(Quadrinomial(a, b, c).poly) == 0:
        raise InternalInconsistency("irreducible F with zero discriminant")
    if isinstance(irr, Uncertified):
        caveats.append(f"irreducibility not certified ({irr.reason}); all conclusions assume it")
    F = Quadrinomial(a, b, c).poly
    results, inconsistent = {}, False
    for p in opts.primes:
        predicted = [m.nu for m in matches if m.prime == p]
        res, bad = _analyze_prime(F, p, predicted, opts, caveats)
        results[p] = res
        inconsistent |= bad
    # primes >= 5 never divide the index of a quartic field
    nu2 = results[2].nu if 2 in results else 0
    nu3 = results[3].nu if 3 in results else 0

    verdict: MonogenicityVerdict
    divisor = next((p for p in (2, 3) if results.get(p) and results[p].nu), None)
    if divisor is not None:
        verdict = NotMonogenic(divisor)
    else:
        verdict = Inconclusive("no common index divisor, and no generator certificate found")
        if c != 0:
            for p in primes_up_to(THEOREM3_PRIME_LIMIT):
                if c % p:
                    continue
                v = check_theorem3(a, b, c, p, opts.sf_bound)
                if isinstance(v, FieldMonogenicPolyNot):
                    verdict = v
                    matches.append(TheoremMatch(3, 0, p, 0))
                    if v.caveat:
                        caveats.append(v.caveat)
                    break
    if isinstance(verdict, FieldMonogenicPolyNot) and (nu2 or nu3):
        caveats.append("generator certificate found although a common index divisor was detected")
        inconsistent = True
    return IndexReport(a, b, c, nu2, nu3, results, matches, verdict, irr, caveats, inconsistent)


# ---------------------------------------------------------------------------
# family verification


@dataclass(frozen=True)
class Counterexample:
    a: int
    b: int
    c: int
    cls: tuple
    reason: str


@dataclass
class ProbeReport:
    scanned: int = 0
    hits: list = field(default_factory=list)  # classes whose lifts all give the claimed shape
    covered: int = 0  # classes some lift of which falls under another case
    skipped: int = 0

@dataclass
class FamilyReport:
    theorem: int
    case: int
    variant: Optional[str]
    claimed_shape: SplittingShape
    claimed_nu: int
    classes: int
    lifts_per_class: int
    checked: int = 0
    resampled: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    empty_classes: list = field(default_factory=list)
    shapes_seen: Counter = field(default_factory=Counter)
    subcases: Counter = field(default_factory=Counter)
    probe: Optional[ProbeReport] = None
    instances: list = field(default_factory=list)  # (a, b, c) checked, when kept

    @property
    def passed(self) -> bool:
        return not self.counterexamples and self.checked > 0


def _check_lift(case: FamilyCase, a: int, b: int, c: int, max_tries: int) -> tuple[Optional[str], Optional[SplittingShape]]:
    if not case.matches(a, b, c):
        return "matcher does not fire", None
    F = Quadrinomial(a, b, c).poly
    try:
        pa = analyze_prime(F, case.prime, max_tries)
    except (ValueError, ArithmeticError) as exc:
        return f"engine error: {exc}", None
    if pa.shape is None:
        return "engine inconclusive (no regular lift found)", None
    if pa.shape != case.shape:
        return f"shape {pa.shape} != claimed {case.shape}", pa.shape
    nu = engstrom_nu(pa.shape, case.prime)
    if nu != case.nu:
        return f"v_p(i(K)) = {nu} != claimed {case.nu}", pa.shape
    if dedekind_p_maximal(F, case.prime):
        return "Dedekind says Z[alpha] is p-maximal", pa.shape
    return None, pa.shape


def _class_rng(seed: int, case: FamilyCase, idx: int) -> random.Random:
    return random.Random(f"{seed}:{case.theorem}:{case.number}:{idx}")


def _verify_class(args) -> dict:
    theorem, number, variant_kw, idx, cls, lifts, seed, max_tries, keep = args
    case = get_case(theorem, number, **variant_kw)
    rng = _class_rng(seed, case, idx)
    out = {"checked": 0, "resampled": 0, "cx": [], "empty": False, "shapes": Counter(), "sub": Counter(), "inst": []}
    done = 0
    while done < lifts:
        try:
            a, b, c = case.sample(cls, rng)
        except SynthesisError:
            out["empty"] = True
            break
        if isinstance(certify_irreducible(a, b, c), Reducible):
            out["resampled"] += 1
            if out["resampled"] > 10 * lifts:
                out["empty"] = True
                break
            continue
        done += 1
        reason, shape = _check_lift(case, a, b, c, max_tries)
        out["checked"] += 1
        if keep:
            out["inst"].append((a, b, c))
        if shape is not None:
            out["shapes"][shape.render()] += 1
        sub = case.subcase(a, b, c)
        if sub:
            out["sub"][sub] += 1
        if reason:
            out["cx"].append(Counterexample(a, b, c, tuple(cls), reason))
    return out


def probe_case(
    case: FamilyCase,
    seed: int = 0,
    lifts: int = 3,
    max_tries: int = DEFAULT_MAX_TRIES,
    others: Sequence[FamilyCase] = (),
) -> Optional[ProbeReport]:
    """Residue classes outside the case list, satisfying its mod-p preamble,
    whose lifts still all produce the claimed shape.  Classes reaching into
    one of ``others`` are counted as covered instead."""
    space = case.probe_space()
    if space is None:
        return None
    rep = ProbeReport()
    rng = random.Random(f"{seed}:probe:{case.theorem}:{case.number}")
    for cls in space:
        rep.scanned += 1
        agree, covered, drawn = 0, False, 0
        for _ in range(lifts):
            trip = case.probe_sample(cls, rng)
            if trip is None or trip[1] == 0 or trip[2] == 0:
                break
            drawn += 1
            if any(o.matches(*trip) for o in others):
                covered = True
                break
            try:
                pa = analyze_prime(Quadrinomial(*trip).poly, case.prime, max_tries)
            except (ValueError, ArithmeticError):
                break
            if pa.shape != case.shape:
                break
            agree += 1
        if covered:
            rep.covered += 1
        elif drawn == 0:
            rep.skipped += 1
        elif agree == lifts:
            rep.hits.append(tuple(cls))
    return rep


def verify_family(
    theorem: int,
    case: int,
    lifts_per_class: int = 50,
    seed: int = 0,
    tau_variant: str = DEFAULT_TAU_VARIANT,
    case3_modulus: int = DEFAULT_CASE3_MODULUS,
    probe: bool = False,
    workers: int = 1,
    max_tries: int = DEFAULT_MAX_TRIES,
    keep_instances: bool = False,
) -> FamilyReport:
    """Check a case's claimed shape and v_p(i(K)) on random lifts of every class.

    Lifts are drawn from a per-class generator seeded by (seed, theorem,
    case, class index), so the outcome does not depend on worker count.
    """
    fc = get_case(theorem, case, tau_variant=tau_variant, case3_modulus=case3_modulus)
    classes = fc.classes()
    rep = FamilyReport(theorem, case, fc.variant, fc.shape, fc.nu, len(classes), lifts_per_class)
    kw = {"tau_variant": tau_variant, "case3_modulus": case3_modulus}
    jobs = [(theorem, case, kw, i, cls, lifts_per_class, seed, max_tries, keep_instances) for i, cls in enumerate(classes)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outs = list(pool.map(_verify_class, jobs))
    else:
        outs = [_verify_class(j) for j in jobs]
    for cls, out in zip(classes, outs):
        rep.checked += out["checked"]
        rep.resampled += out["resampled"]
        rep.counterexamples.extend(out["cx"])
        rep.shapes_seen.update(out["shapes"])
        rep.subcases.update(out["sub"])
        rep.instances.extend(out["inst"])
        if out["empty"]:
            rep.empty_classes.append(cls)
    if probe:
        table = theorem1_cases(tau_variant) if theorem == 1 else theorem2_cases(case3_modulus)
        others = [o for o in table if o.number != case]
        rep.probe = probe_case(fc, seed, max_tries=max_tries, others=others)
    return rep
