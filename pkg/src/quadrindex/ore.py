"""Ore's theorem at a prime p: residual polynomials of every principal
side, the regularity test, the resulting splitting shape of p, the
linear-lift regularization for inseparable residuals, and Dedekind's
criterion as an independent check of p-maximality.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .exactint import val_p, unit_part
from .finitefield import (
    GFPoly,
    ModFactorization,
    ResidueField,
    factor_mod_p,
    fpoly,
    fpoly_factor,
    gf_gcd,
)
from .newton import NewtonPolygon, Side, lattice_index, principal_polygon
from .polyring import IntPoly, PhiExpansion, as_poly, phi_expand

log = logging.getLogger(__name__)

DEFAULT_MAX_TRIES = 64


@dataclass(frozen=True)
class SplittingShape:
    """Multiset of (e, f) pairs, kept sorted by (f, e)."""

    parts: tuple[tuple[int, int], ...]

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(sorted(((int(e), int(f)) for e, f in parts), key=lambda ef: (ef[1], ef[0]))))

    @classmethod
    def parse(cls, text: str) -> "SplittingShape":
        """Inverse of :meth:`render`: "[1^2, 2^1]" -> ((2, 1), (1, 2))."""
        body = text.strip().strip("[]")
        parts = []
        for item in body.split(","):
            f, e = item.strip().split("^")
            parts.append((int(e), int(f)))
        return cls(parts)

    @property
    def total(self) -> int:
        return sum(e * f for e, f in self.parts)

    def render(self) -> str:
        return "[" + ", ".join(f"{f}^{e}" for e, f in self.parts) + "]"

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other: "SplittingShape") -> "SplittingShape":
        return SplittingShape(self.parts + other.parts)


@dataclass(frozen=True)
class NotRegular:
    """Marker: some residual polynomial is inseparable for every lift tried."""

    phis: tuple[IntPoly, ...] = ()

    def __str__(self) -> str:
        return "not regular at " + ", ".join(str(g) for g in self.phis)


@dataclass(frozen=True)
class ResidualPolynomial:
    side: Side
    field: ResidueField
    coeffs: tuple  # ResidueFieldElem, low degree first

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_lists(self) -> list[list[int]]:
        return [list(c.value) for c in self.coeffs]


def residue_field_of(phi: IntPoly, p: int) -> ResidueField:
    return ResidueField(GFPoly(p, phi.coeffs))


def residual_poly(exp: PhiExpansion, side: Side, p: int, field: Optional[ResidueField] = None) -> ResidualPolynomial:
    if field is None:
        field = residue_field_of(exp.phi, p)
    d, e = side.degree, side.ram_index
    coeffs = []
    for k in range(d + 1):
        j = side.start.j + k * e
        a = exp.coeffs[j] if j < len(exp.coeffs) else IntPoly()
        v = a.content_val(p)
        if not a.is_zero() and v == side.ordinate_at(j):
            pv = p**v
            coeffs.append(field(IntPoly(c // pv for c in a.coeffs)))
        else:
            coeffs.append(field.zero())
    res = fpoly(field, coeffs)
    # the end points lie on the side and are units after scaling
    assert len(res) == d + 1, "residual polynomial lost its leading term"
    return ResidualPolynomial(side, field, res)


@dataclass
class SideAnalysis:
    side: Side
    residual: ResidualPolynomial
    factors: list  # (monic irreducible tuple, multiplicity)

    @property
    def regular(self) -> bool:
        return all(k == 1 for _, k in self.factors)


@dataclass
class FactorAnalysis:
    """Ore data attached to one irreducible factor phi-bar of F mod p."""

    phi_bar: GFPoly
    multiplicity: int
    lift: Optional[IntPoly] = None
    shift: Optional[int] = None
    polygon: Optional[NewtonPolygon] = None
    sides: list[SideAnalysis] = field(default_factory=list)

    @property
    def regular(self) -> bool:
        return all(sa.regular for sa in self.sides)

    def parts(self) -> list[tuple[int, int]]:
        if self.multiplicity == 1:
            return [(1, self.phi_bar.degree)]
        out = []
        for sa in self.sides:
            for psi, _ in sa.factors:
                out.append((sa.side.ram_index, self.phi_bar.degree * (len(psi) - 1)))
        return out

    def index(self) -> int:
        return lattice_index(self.polygon) if self.polygon is not None else 0


@dataclass(frozen=True)
class RegularityEntry:
    phi: IntPoly
    side: Side
    factor: tuple
    multiplicity: int


@dataclass
class RegularityReport:
    entries: list[RegularityEntry]
    p_regular: bool
    shift_used: Optional[int] = None


def _sym(c: int, p: int) -> int:
    c %= p
    return c if c <= p // 2 else c - p


def symmetric_lift(g: GFPoly) -> IntPoly:
    """Integer lift of a monic phi-bar.  Linear factors lift as x - r with the
    root r in (-p/2, p/2] (so 1 mod 2 gives x - 1); higher degree factors
    take coefficients in that range."""
    p = g.p
    if g.degree == 1:
        return IntPoly.x_minus(_sym(-g[0], p))
    return IntPoly(_sym(c, p) for c in g.coeffs)


def analyze_factor(F: IntPoly, p: int, phi_bar: GFPoly, multiplicity: int, lift: Optional[IntPoly] = None) -> FactorAnalysis:
    fa = FactorAnalysis(phi_bar, multiplicity)
    if multiplicity == 1:
        return fa
    if lift is None:
        lift = symmetric_lift(phi_bar)
    fa.lift = lift
    if lift.degree == 1:
        fa.shift = -lift[0]
    exp = phi_expand(F, lift)
    if exp.coeffs[0].is_zero():
        raise ValueError(f"{lift} divides F exactly; F is reducible")
    fa.polygon = principal_polygon(exp, p)
    field_ = residue_field_of(lift, p)
    for side in fa.polygon.sides:
        res = residual_poly(exp, side, p, field_)
        if res.degree == 1:
            factors = [(res.coeffs, 1)]
        else:
            factors = fpoly_factor(res.coeffs)
        fa.sides.append(SideAnalysis(side, res, factors))
    return fa


def _factors(F: IntPoly, p: int) -> ModFactorization:
    fac = factor_mod_p(F, p)
    if fac.unit % p == 0:
        raise ValueError("F vanishes mod p")
    return fac


def is_p_regular(F, p: int) -> RegularityReport:
    F = as_poly(F)
    entries = []
    for g, k in _factors(F, p).factors:
        fa = analyze_factor(F, p, g, k)
        for sa in fa.sides:
            for psi, n in sa.factors:
                entries.append(RegularityEntry(fa.lift, sa.side, psi, n))
    return RegularityReport(entries, all(e.multiplicity == 1 for e in entries))


def ore_split(F, p: int) -> Union[SplittingShape, NotRegular]:
    F = as_poly(F)
    parts, bad = [], []
    for g, k in _factors(F, p).factors:
        fa = analyze_factor(F, p, g, k)
        if not fa.regular:
            bad.append(fa.lift)
        parts.extend(fa.parts())
    if bad:
        return NotRegular(tuple(bad))
    return SplittingShape(parts)


# ---------------------------------------------------------------------------
# linear lifts x - s


def canonical_shift(F: IntPoly, p: int) -> Optional[int]:
    """s = p^k * b_p with k = v_p(b)/2, the lift used for phi = x when the
    x-coefficient b has even positive valuation."""
    b = F[1]
    if b == 0:
        return None
    vb = val_p(b, p)
    if vb == 0 or vb % 2:
        return None
    return p ** (vb // 2) * unit_part(b, p)


def refined_shift(fa: FactorAnalysis, p: int) -> Optional[int]:
    """x - s -> x - (s + p^h y0) for the first side of integral slope -h whose
    residual polynomial has a repeated root y0 in the residue field."""
    if fa.shift is None:
        return None
    for sa in fa.sides:
        if sa.side.ram_index != 1:
            continue
        for psi, n in sa.factors:
            if n > 1 and len(psi) == 2:
                y0 = (-psi[0]).value
                y0 = y0[0] if y0 else 0
                h = sa.side.height // sa.side.length
                return fa.shift + p**h * y0
    return None


@dataclass
class ShiftResult:
    shift: int
    shape: SplittingShape
    analysis: FactorAnalysis
    tried: list[int]


@dataclass
class ShiftFailure:
    tried: list[int]

    def __str__(self) -> str:
        return f"no linear lift among {len(self.tried)} tried makes F regular"


def _shift_candidates(F: IntPoly, p: int, root: int, first: FactorAnalysis, max_tries: int) -> Iterator[int]:
    canon = canonical_shift(F, p)
    if canon is not None and canon % p == root % p:
        yield canon
    # Newton-style refinement chains from the default lift and the canonical one
    starts = [first]
    if canon is not None and canon % p == root % p:
        starts.append(analyze_factor(F, p, first.phi_bar, first.multiplicity, IntPoly.x_minus(canon)))
    for fa in starts:
        for _ in range(max_tries):
            s = refined_shift(fa, p)
            if s is None:
                break
            yield s
            fa = analyze_factor(F, p, fa.phi_bar, fa.multiplicity, IntPoly.x_minus(s))
            if fa.regular:
                break
    for j in range(1, max_tries + 1):
        yield root + p * j


def regularize_factor(F: IntPoly, p: int, fa: FactorAnalysis, max_tries: int = DEFAULT_MAX_TRIES) -> Union[FactorAnalysis, ShiftFailure]:
    """Search linear lifts of phi-bar = x - root until the factor is regular."""
    if fa.regular:
        return fa
    if fa.phi_bar.degree != 1:
        return ShiftFailure([])
    root = fa.shift
    tried: list[int] = []
    seen = {root}
    for s in _shift_candidates(F, p, root, fa, max_tries):
        if s in seen:
            continue
        seen.add(s)
        tried.append(s)
        cand = analyze_factor(F, p, fa.phi_bar, fa.multiplicity, IntPoly.x_minus(s))
        if cand.regular:
            return cand
    log.debug("shift search failed for %s at p=%d after %d lifts", fa.phi_bar, p, len(tried))
    return ShiftFailure(tried)


def regularize_by_shift(F, p: int, phi: IntPoly, max_tries: int = DEFAULT_MAX_TRIES) -> Union[ShiftResult, ShiftFailure]:
    """Make the phi-part of F regular by moving to a lift x - s of phi mod p.

    Returns the shift together with the full splitting shape of p (other
    factors of F mod p analysed with their default lifts and regularized
    the same way).  An already regular phi gives shift 0.
    """
    F = as_poly(F)
    if phi.degree != 1 or not phi.is_monic():
        raise ValueError("phi must be monic linear")
    target = GFPoly(p, phi.coeffs)
    result = analyze_prime(F, p, max_tries)
    for fa in result.factors:
        if fa.phi_bar == target:
            break
    else:
        raise ValueError(f"{phi} does not divide F mod {p}")
    if result.shape is None:
        return ShiftFailure(result.tried)
    initially_regular = analyze_factor(F, p, fa.phi_bar, fa.multiplicity).regular
    shift = 0 if initially_regular else fa.shift
    return ShiftResult(shift, result.shape, fa, result.tried)


@dataclass
class PrimeAnalysis:
    p: int
    factorization: ModFactorization
    factors: list[FactorAnalysis]
    shape: Optional[SplittingShape]
    shifted: bool = False
    tried: list[int] = field(default_factory=list)

    @property
    def conclusive(self) -> bool:
        return self.shape is not None

    def index_lower_bound(self) -> int:
        return sum(fa.index() for fa in self.factors)


def analyze_prime(F, p: int, max_tries: int = DEFAULT_MAX_TRIES) -> PrimeAnalysis:
    """Ore at p with linear-lift regularization of every inseparable factor."""
    F = as_poly(F)
    fac = _factors(F, p)
    analyses, parts, tried = [], [], []
    shifted, ok = False, True
    for g, k in fac.factors:
        fa = analyze_factor(F, p, g, k)
        if not fa.regular:
            out = regularize_factor(F, p, fa, max_tries)
            if isinstance(out, ShiftFailure):
                tried.extend(out.tried)
                ok = False
            else:
                fa, shifted = out, True
        analyses.append(fa)
        parts.extend(fa.parts())
    shape = SplittingShape(parts) if ok else None
    if shape is not None and shape.total != F.degree:
        raise AssertionError(f"shape {shape} does not account for degree {F.degree}")
    return PrimeAnalysis(p, fac, analyses, shape, shifted, tried)


# ---------------------------------------------------------------------------


def dedekind_p_maximal(F, p: int) -> bool:
    """Dedekind's criterion: Z[alpha] is p-maximal iff gcd(f, g, h) = 1 mod p,
    where F = prod phi_i^l_i mod p, g = prod phi_i, h = F / g mod p and
    f = (F - g h) / p."""
    F = as_poly(F)
    fac = factor_mod_p(F, p)
    if all(k == 1 for _, k in fac.factors):
        return True
    g_bar = GFPoly(p, (1,))
    h_bar = GFPoly(p, (fac.unit,))
    for phi, k in fac.factors:
        g_bar = g_bar * phi
        h_bar = h_bar * phi ** (k - 1)
    g, h = g_bar.lift(), h_bar.lift()
    diff = F - g * h
    assert all(c % p == 0 for c in diff.coeffs)
    f_bar = GFPoly(p, (c // p for c in diff.coeffs))
    common = gf_gcd(gf_gcd(f_bar, g_bar), h_bar)
    return common.degree == 0
