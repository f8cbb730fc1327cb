"""Integer helpers: p-adic valuations, unit parts, the (s, t) Diophantine
solve used for the scaled-power generator, and bounded square-freeness.

Python ints are already arbitrary precision, so no big-integer type is
defined here. ``INF`` stands for the valuation of zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

DEFAULT_SF_BOUND = 10**6


class _Infinity:
    """Valuation of 0. Compares greater than every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("quadrindex.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        if other <= 0:
            raise ValueError("INF is only scaled by positive integers")
        return self

    __rmul__ = __mul__


INF = _Infinity()
Valuation = Union[int, _Infinity]


def val_p(m: int, p: int) -> Valuation:
    """Largest k with p**k | m; INF for m == 0."""
    if m == 0:
        return INF
    if p < 2:
        raise ValueError(f"bad prime {p}")
    m = abs(m)
    k = 0
    # square-and-divide keeps this fast for huge powers of p
    while m % p == 0:
        pk, e = p, 1
        while m % (pk * pk) == 0:
            pk, e = pk * pk, 2 * e
        m //= pk
        k += e
    return k


def unit_part(m: int, p: int) -> int:
    """m / p**val_p(m); sign preserved."""
    if m == 0:
        raise ValueError("unit part of 0 is undefined")
    return m // p ** val_p(m, p)


def solve_diophantine_st(nc: int) -> tuple[int, int]:
    """Unique (s, t) with nc*s - 4*t == 1, 0 <= s < 4 and t >= 0."""
    if nc <= 0:
        raise ValueError(f"nc must be positive, got {nc}")
    if nc % 2 == 0:
        raise ValueError(f"nc*s - 4t = 1 has no solution for even nc={nc}")
    s = pow(nc, -1, 4)
    return s, (nc * s - 1) // 4


@lru_cache(maxsize=8)
def primes_up_to(n: int) -> tuple[int, ...]:
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@dataclass(frozen=True)
class Squarefree:
    pass


@dataclass(frozen=True)
class NotSquarefree:
    witness: int  # witness**2 divides the tested integer


@dataclass(frozen=True)
class UnknownBeyondBound:
    bound: int


SquarefreeStatus = Union[Squarefree, NotSquarefree, UnknownBeyondBound]


def squarefree_check(m: int, bound: int = DEFAULT_SF_BOUND) -> SquarefreeStatus:
    """Trial division by the primes <= bound.

    The cofactor r left after trial division has no prime factor <= bound,
    so it is decided exactly whenever r < bound**3: it is then 1, a prime,
    a product of two distinct primes, or a prime square (caught by isqrt).
    """
    if m == 0:
        raise ValueError("0 is not square free")
    if bound < 2:
        raise ValueError("bound must be >= 2")
    r = abs(m)
    for q in primes_up_to(bound):
        if q * q > r:
            return Squarefree()  # r is 1 or prime
        if r % q == 0:
            r //= q
            if r % q == 0:
                return NotSquarefree(q)
    if r == 1:
        return Squarefree()
    root = math.isqrt(r)
    if root * root == r:
        return NotSquarefree(root)
    if r < bound**3:
        return Squarefree()
    return UnknownBeyondBound(bound)


def divisors(n: int) -> list[int]:
    """Positive divisors of n != 0 by trial division (small n only)."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]
