"""Dense univariate integer polynomials.

Coefficients are stored low degree first: ``IntPoly((c, b, 0, a, 1))`` is
x^4 + a x^3 + b x + c.  Everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactint import INF, val_p


class NotIntegral(ArithmeticError):
    """A scaled power alpha^s / p^t is not an algebraic integer."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def x_minus(cls, r: int) -> "IntPoly":
        return cls((-r, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            if u:
                for j, v in enumerate(other.coeffs):
                    out[i + j] += u * v
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def divmod_monic(self, g: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Euclidean division by a monic g; exact over Z."""
        if not g.is_monic():
            raise ValueError("divisor must be monic")
        r = list(self.coeffs)
        dg = g.degree
        if len(r) - 1 < dg:
            return IntPoly(), IntPoly(r)
        q = [0] * (len(r) - dg)
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if c:
                q[i - dg] = c
                for j in range(dg + 1):
                    r[i - dg + j] -= c * g.coeffs[j]
        return IntPoly(q), IntPoly(r[:dg])

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def content_val(self, p: int):
        """min over coefficients of val_p; INF for the zero polynomial."""
        v = INF
        for c in self.coeffs:
            if c:
                vc = val_p(c, p)
                if vc < v:
                    v = vc
                    if v == 0:
                        break
        return v

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c in (1, -1):
                s = mono
            elif mono:
                s = f"{abs(c)}*{mono}"
            else:
                s = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, s))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, s in terms[1:]:
            out += f" {sign} {s}"
        return out


@dataclass(frozen=True)
class Quadrinomial:
    """x^4 + a x^3 + b x + c."""

    a: int
    b: int
    c: int

    @property
    def poly(self) -> IntPoly:
        return IntPoly((self.c, self.b, 0, self.a, 1))


def as_poly(F) -> IntPoly:
    return F.poly if isinstance(F, Quadrinomial) else F


@dataclass(frozen=True)
class PhiExpansion:
    """F = sum_i coeffs[i] * phi^i with deg coeffs[i] < deg phi."""

    phi: IntPoly
    coeffs: tuple[IntPoly, ...]

    def recompose(self) -> IntPoly:
        out = IntPoly()
        for a in reversed(self.coeffs):
            out = out * self.phi + a
        return out


def phi_expand(F, phi: IntPoly) -> PhiExpansion:
    F = as_poly(F)
    if phi.degree < 1 or not phi.is_monic():
        raise ValueError(f"phi must be monic of degree >= 1, got {phi}")
    coeffs = []
    rest = F
    while not rest.is_zero():
        rest, r = rest.divmod_monic(phi)
        coeffs.append(r)
    return PhiExpansion(phi, tuple(coeffs))


def sylvester_matrix(F: IntPoly, G: IntPoly) -> list[list[int]]:
    m, n = F.degree, G.degree
    size = m + n
    rows = []
    fh = list(reversed(F.coeffs))
    gh = list(reversed(G.coeffs))
    for i in range(n):
        rows.append([0] * i + fh + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gh + [0] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    M = [list(row) for row in matrix]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def resultant(F: IntPoly, G: IntPoly) -> int:
    if F.is_zero() or G.is_zero():
        return 0
    if F.degree == 0:
        return F.lc ** G.degree
    if G.degree == 0:
        return G.lc ** F.degree
    return bareiss_det(sylvester_matrix(F, G))


def discriminant(F) -> int:
    F = as_poly(F)
    n = F.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = resultant(F, F.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, F.lc)
    assert rem == 0
    return q


def eisenstein_at(F, p: int) -> bool:
    F = as_poly(F)
    if F.degree < 1 or not F.is_monic():
        return False
    if any(c % p for c in F.coeffs[:-1]):
        return False
    return F[0] % (p * p) != 0


def power_sums(F: IntPoly, kmax: int) -> list[int]:
    """[P_0, ..., P_kmax] with P_k the sum of k-th powers of the roots of monic F."""
    n = F.degree
    e = [F[n - i] for i in range(n + 1)]  # e[i] is the coefficient of x^(n-i)
    P = [n]
    for k in range(1, kmax + 1):
        acc = sum(e[i] * P[k - i] for i in range(1, min(k - 1, n) + 1))
        if k <= n:
            acc += k * e[k]
        P.append(-acc)
    return P


def charpoly_from_power_sums(Q: Sequence[int], n: int) -> IntPoly:
    """Monic degree-n polynomial whose roots have power sums Q[1..n]."""
    b = [1]
    for k in range(1, n + 1):
        acc = Q[k] + sum(b[i] * Q[k - i] for i in range(1, k))
        q, r = divmod(-acc, k)
        if r:
            raise ArithmeticError("power sums do not come from an integral polynomial")
        b.append(q)
    return IntPoly(reversed(b))


def minpoly_scaled_power(F, s: int, t: int, p: int) -> IntPoly:
    """Characteristic polynomial of alpha^s / p^t for a root alpha of monic F.

    This equals p^(-n t) * Res_y(F(y), p^t x - y^s); it is the minimal
    polynomial whenever alpha^s / p^t generates the same field.
    """
    F = as_poly(F)
    if not F.is_monic():
        raise ValueError("F must be monic")
    if s < 1 or t < 0:
        raise ValueError(f"need s >= 1 and t >= 0, got s={s}, t={t}")
    n = F.degree
    P = power_sums(F, n * s)
    chi = charpoly_from_power_sums([P[s * k] for k in range(n + 1)], n)
    out = []
    for i in range(n + 1):
        scale = p ** (t * (n - i))
        q, r = divmod(chi[i], scale)
        if r:
            raise NotIntegral(f"coefficient of x^{i} is {chi[i]}/{scale}")
        out.append(q)
    return IntPoly(out)


def eval_mod(F, x0: int, m: int) -> int:
    F = as_poly(F)
    if m < 2:
        raise ValueError("modulus must be >= 2")
    acc = 0
    for c in reversed(F.coeffs):
        acc = (acc * x0 + c) % m
    return acc
