"""Polynomials over F_p, residue fields F_p[x]/(phi), and exhaustive
factorization for the small primes this package works with.

Polynomials over a residue field (needed for residual polynomials) are
plain tuples of :class:`ResidueFieldElem`, low degree first; the helpers
``fpoly_*`` operate on them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .polyring import IntPoly, as_poly

MAX_FACTOR_PRIME = 31


class UnsupportedPrime(ValueError):
    pass


@dataclass(frozen=True)
class GFPoly:
    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        c = [int(x) % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_int_poly(cls, F, p: int) -> "GFPoly":
        return cls(p, as_poly(F).coeffs)

    def lift(self) -> IntPoly:
        """Integer lift with coefficients in [0, p)."""
        return IntPoly(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "GFPoly"):
        if other.p != self.p:
            raise ValueError(f"mixing F_{self.p} and F_{other.p}")

    def __add__(self, other: "GFPoly") -> "GFPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return GFPoly(self.p, (self[i] + other[i] for i in range(n)))

    def __neg__(self) -> "GFPoly":
        return GFPoly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other: "GFPoly") -> "GFPoly":
        return self + (-other)

    def __mul__(self, other) -> "GFPoly":
        if isinstance(other, int):
            return GFPoly(self.p, (c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero() or other.is_zero():
            return GFPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            if u:
                for j, v in enumerate(other.coeffs):
                    out[i + j] += u * v
        return GFPoly(self.p, out)

    def __pow__(self, k: int) -> "GFPoly":
        out = GFPoly(self.p, (1,))
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, g: "GFPoly") -> tuple["GFPoly", "GFPoly"]:
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        inv = pow(g.lc, -1, p)
        r = list(self.coeffs)
        dg = g.degree
        if len(r) - 1 < dg:
            return GFPoly(p), self
        q = [0] * (len(r) - dg)
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i] * inv % p
            if c:
                q[i - dg] = c
                for j in range(dg + 1):
                    r[i - dg + j] = (r[i - dg + j] - c * g.coeffs[j]) % p
        return GFPoly(p, q), GFPoly(p, r[:dg])

    def __floordiv__(self, g: "GFPoly") -> "GFPoly":
        return divmod(self, g)[0]

    def __mod__(self, g: "GFPoly") -> "GFPoly":
        return divmod(self, g)[1]

    def monic(self) -> "GFPoly":
        if self.is_zero():
            return self
        return self * pow(self.lc, -1, self.p)

    def derivative(self) -> "GFPoly":
        return GFPoly(self.p, (i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x0 + c) % self.p
        return acc

    def __str__(self) -> str:
        return f"{IntPoly(self.coeffs)} (mod {self.p})"


def gf_gcd(g: GFPoly, h: GFPoly) -> GFPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    g._check(h)
    while not h.is_zero():
        g, h = h, g % h
    return g.monic()


def monic_polys(p: int, degree: int) -> Iterator[GFPoly]:
    """All monic polynomials of the given degree, lexicographic in the
    coefficient vector (constant term varies slowest)."""
    for lower in itertools.product(range(p), repeat=degree):
        yield GFPoly(p, lower + (1,))


def is_irreducible_mod_p(g: GFPoly) -> bool:
    if g.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    for d in range(1, g.degree // 2 + 1):
        for cand in monic_polys(g.p, d):
            if (g % cand).is_zero():
                return False
    return True


@dataclass(frozen=True)
class ModFactorization:
    p: int
    unit: int
    factors: tuple[tuple[GFPoly, int], ...]

    def product(self) -> GFPoly:
        out = GFPoly(self.p, (self.unit,))
        for g, k in self.factors:
            out = out * g**k
        return out

    def degree_pattern(self) -> tuple[int, ...]:
        return tuple(sorted(g.degree for g, k in self.factors for _ in range(k)))


def factor_gfpoly(f: GFPoly, max_prime: int = MAX_FACTOR_PRIME) -> ModFactorization:
    """Exhaustive trial division by monic irreducibles of increasing degree."""
    if f.p > max_prime:
        raise UnsupportedPrime(f"exhaustive factorization limited to p <= {max_prime}, got {f.p}")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p = f.p
    unit = f.lc
    rest = f.monic()
    found: list[tuple[GFPoly, int]] = []
    d = 1
    while 2 * d <= rest.degree:
        for cand in monic_polys(p, d):
            if 2 * d > rest.degree:
                break
            k = 0
            while True:
                q, r = divmod(rest, cand)
                if not r.is_zero():
                    break
                rest, k = q, k + 1
            # candidates are scanned by degree, so any divisor found here is irreducible
            if k:
                found.append((cand, k))
        d += 1
    if rest.degree >= 1:
        for i, (g, k) in enumerate(found):
            if g == rest:
                found[i] = (g, k + 1)
                break
        else:
            found.append((rest, 1))
    found.sort(key=lambda gk: (gk[0].degree, gk[0].coeffs))
    return ModFactorization(p, unit, tuple(found))


def factor_mod_p(F, p: int) -> ModFactorization:
    return factor_gfpoly(GFPoly.from_int_poly(F, p))


# ---------------------------------------------------------------------------
# residue fields


@dataclass(frozen=True)
class ResidueField:
    """F_p[x]/(modulus) for a monic irreducible modulus."""

    modulus: GFPoly

    def __post_init__(self):
        m = self.modulus
        if m.degree < 1 or m.lc != 1:
            raise ValueError(f"modulus must be monic of degree >= 1: {m}")

    @classmethod
    def checked(cls, modulus: GFPoly) -> "ResidueField":
        if not is_irreducible_mod_p(modulus):
            raise ValueError(f"{modulus} is reducible")
        return cls(modulus)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def order(self) -> int:
        return self.p**self.degree

    def __call__(self, value) -> "ResidueFieldElem":
        if isinstance(value, int):
            g = GFPoly(self.p, (value,))
        elif isinstance(value, IntPoly):
            g = GFPoly(self.p, value.coeffs)
        elif isinstance(value, GFPoly):
            g = value
        else:
            g = GFPoly(self.p, value)
        return ResidueFieldElem(self, (g % self.modulus).coeffs)

    def zero(self) -> "ResidueFieldElem":
        return ResidueFieldElem(self, ())

    def one(self) -> "ResidueFieldElem":
        return ResidueFieldElem(self, (1,))

    def elements(self) -> Iterator["ResidueFieldElem"]:
        for vec in itertools.product(range(self.p), repeat=self.degree):
            yield self(GFPoly(self.p, vec))


@dataclass(frozen=True)
class ResidueFieldElem:
    field: ResidueField
    value: tuple[int, ...]

    def _poly(self) -> GFPoly:
        return GFPoly(self.field.p, self.value)

    def _same(self, other: "ResidueFieldElem"):
        if other.field != self.field:
            raise ValueError("elements of different residue fields")

    def __add__(self, other):
        self._same(other)
        return self.field(self._poly() + other._poly())

    def __sub__(self, other):
        self._same(other)
        return self.field(self._poly() - other._poly())

    def __neg__(self):
        return self.field(-self._poly())

    def __mul__(self, other):
        self._same(other)
        return self.field(self._poly() * other._poly())

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self) -> bool:
        return bool(self.value)

    def inv(self) -> "ResidueFieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in a residue field")
        # extended Euclid on (value, modulus)
        p = self.field.p
        r0, r1 = self.field.modulus, self._poly()
        s0, s1 = GFPoly(p), GFPoly(p, (1,))
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        # r0 is a nonzero constant since the modulus is irreducible
        return self.field(s0 * pow(r0.lc, -1, p))

    def __truediv__(self, other):
        return self * other.inv()

    def __repr__(self) -> str:
        return f"[{IntPoly(self.value)}]"


# polynomials over a residue field, tuples low degree first, no trailing zeros


def fpoly(field: ResidueField, coeffs: Sequence) -> tuple:
    c = [x if isinstance(x, ResidueFieldElem) else field(x) for x in coeffs]
    while c and c[-1].is_zero():
        c.pop()
    return tuple(c)


def fpoly_divmod(f: tuple, g: tuple) -> tuple[tuple, tuple]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    field = g[-1].field
    inv = g[-1].inv()
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return (), tuple(r)
    q = [field.zero()] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i] * inv
        if c:
            q[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] = r[i - dg + j] - c * g[j]
    return fpoly(field, q), fpoly(field, r[:dg])


def fpoly_monic(f: tuple) -> tuple:
    if not f:
        return f
    inv = f[-1].inv()
    return tuple(c * inv for c in f)


def fpoly_gcd(f: tuple, g: tuple) -> tuple:
    while g:
        f, g = g, fpoly_divmod(f, g)[1]
    return fpoly_monic(f)


def fpoly_derivative(f: tuple) -> tuple:
    if not f:
        return f
    field = f[0].field
    return fpoly(field, [field(i) * c for i, c in enumerate(f) if i])


def fpoly_mul(f: tuple, g: tuple) -> tuple:
    if not f or not g:
        return ()
    field = f[0].field
    out = [field.zero()] * (len(f) + len(g) - 1)
    for i, u in enumerate(f):
        for j, v in enumerate(g):
            out[i + j] = out[i + j] + u * v
    return fpoly(field, out)


def fpoly_is_squarefree(f: tuple) -> bool:
    return len(fpoly_gcd(f, fpoly_derivative(f))) == 1


def _monic_fpolys(field: ResidueField, degree: int) -> Iterator[tuple]:
    elems = list(field.elements())
    for lower in itertools.product(elems, repeat=degree):
        yield tuple(lower) + (field.one(),)


def fpoly_factor(f: tuple) -> list[tuple[tuple, int]]:
    """Monic irreducible factors with multiplicities, by exhaustive trial division."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    field = f[0].field
    rest = fpoly_monic(f)
    found: list[tuple[tuple, int]] = []
    d = 1
    while 2 * d <= len(rest) - 1:
        for cand in _monic_fpolys(field, d):
            if 2 * d > len(rest) - 1:
                break
            k = 0
            while True:
                q, r = fpoly_divmod(rest, cand)
                if r:
                    break
                rest, k = q, k + 1
            if k:
                found.append((cand, k))
        d += 1
    if len(rest) >= 2:
        for i, (g, k) in enumerate(found):
            if g == rest:
                found[i] = (g, k + 1)
                break
        else:
            found.append((rest, 1))
    return found
