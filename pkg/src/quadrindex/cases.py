"""Case tables for x^4 + a x^3 + b x + c.

Each case records its hypothesis (residue list, congruence on c, valuation
conditions), the claimed valuation of the field index at its prime and the
splitting shape the Newton polygon argument produces.  The matcher and the
family verifier both read these objects; nothing is transcribed twice.

Case families come in three flavours:

* ``ResidueCase``  - a list (or predicate) of residue triples mod fixed moduli;
* ``PairCase``     - a list of (a, b) residues plus a congruence fixing c;
* ``SynthCase``    - valuation conditions; witnesses are built parameter-first.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .exactint import INF, unit_part, val_p
from .ore import SplittingShape

LIFT_RANGE = 2**20
MAX_REJECTIONS = 20000

TAU_VARIANTS = ("shifted", "statement", "proof", "development")
DEFAULT_TAU_VARIANT = "shifted"
T2_CASE3_MODULI = (27, 243)
DEFAULT_CASE3_MODULUS = 27

SHAPE_2_2 = SplittingShape([(1, 2), (1, 2)])
SHAPE_1_1_1e2 = SplittingShape([(1, 1), (1, 1), (2, 1)])
SHAPE_1_1_1_1 = SplittingShape([(1, 1)] * 4)


class SynthesisError(RuntimeError):
    """No witness found for a class within the rejection budget."""


def v2(m: int):
    return val_p(m, 2)


def v3(m: int):
    return val_p(m, 3)


@dataclass(frozen=True)
class TheoremMatch:
    theorem: int
    case: int
    prime: int
    nu: int
    subcase: Optional[str] = None
    variant: Optional[str] = None

    def label(self) -> str:
        if self.theorem == 3:
            return f"T3[p={self.prime}]"
        s = f"T{self.theorem}({self.case})"
        if self.subcase:
            s += f"({self.subcase})"
        return s


@dataclass(kw_only=True)
class FamilyCase:
    theorem: int
    number: int
    prime: int
    nu: int
    shape: SplittingShape
    variant: Optional[str] = None
    note: str = ""

    @property
    def key(self) -> tuple[int, int]:
        return self.theorem, self.number

    def matches(self, a: int, b: int, c: int) -> bool:
        raise NotImplementedError

    def subcase(self, a: int, b: int, c: int) -> Optional[str]:
        return None

    def classes(self) -> list:
        raise NotImplementedError

    def sample(self, cls, rng: random.Random) -> tuple[int, int, int]:
        raise NotImplementedError

    def probe_space(self) -> Optional[Iterator[tuple]]:
        """Residue classes outside the case list that satisfy the case's
        mod-p preamble; None when the case has no finite list."""
        return None

    def probe_sample(self, cls, rng: random.Random) -> Optional[tuple[int, int, int]]:
        return None

    def match(self, a: int, b: int, c: int) -> Optional[TheoremMatch]:
        if not self.matches(a, b, c):
            return None
        return TheoremMatch(self.theorem, self.number, self.prime, self.nu, self.subcase(a, b, c), self.variant)


def _lift(r: int, m: int, rng: random.Random) -> int:
    return r + m * rng.randint(-LIFT_RANGE, LIFT_RANGE)


def _odd(rng: random.Random) -> int:
    return rng.choice((-1, 1)) * (2 * rng.randint(0, LIFT_RANGE) + 1)


def _unit(p: int, rng: random.Random, residue: Optional[int] = None) -> int:
    """Random nonzero integer prime to p, optionally with a fixed residue mod p."""
    while True:
        u = rng.randint(-LIFT_RANGE, LIFT_RANGE)
        if u % p == 0:
            continue
        if residue is None or u % p == residue % p:
            return u


@dataclass(kw_only=True)
class ResidueCase(FamilyCase):
    moduli: tuple[int, int, int]
    listed: Optional[tuple[tuple[int, int, int], ...]] = None
    condition: Optional[Callable[[int, int, int], bool]] = None
    base: Optional[Callable[[int, int, int], bool]] = None
    _classes: Optional[list] = field(default=None, repr=False)

    def classes(self) -> list:
        if self._classes is None:
            if self.listed is not None:
                self._classes = list(self.listed)
            else:
                ma, mb, mc = self.moduli
                # a zero residue stands for the modulus, so valuations stay finite
                self._classes = [
                    t
                    for t in itertools.product(range(ma), range(mb), range(mc))
                    if self.condition(*(r or m for r, m in zip(t, self.moduli)))
                ]
        return self._classes

    def matches(self, a, b, c) -> bool:
        if self.listed is not None:
            ma, mb, mc = self.moduli
            return (a % ma, b % mb, c % mc) in set(self.listed)
        return self.condition(a, b, c)

    def sample(self, cls, rng):
        ma, mb, mc = self.moduli
        for _ in range(MAX_REJECTIONS):
            a, b, c = _lift(cls[0], ma, rng), _lift(cls[1], mb, rng), _lift(cls[2], mc, rng)
            if c != 0 and b != 0 and self.matches(a, b, c):
                return a, b, c
        raise SynthesisError(f"no lift of {cls} satisfies {self.key}")

    def probe_space(self):
        if self.base is None:
            return None
        ma, mb, mc = self.moduli
        inside = set(self.classes())
        return (t for t in itertools.product(range(ma), range(mb), range(mc)) if self.base(*t) and t not in inside)

    def probe_sample(self, cls, rng):
        ma, mb, mc = self.moduli
        return _lift(cls[0], ma, rng), _lift(cls[1], mb, rng), _lift(cls[2], mc, rng)


@dataclass(kw_only=True)
class PairCase(FamilyCase):
    """(a, b) mod ``modulus`` in ``pairs`` and c = sign*(a+b) + offset mod c_modulus."""

    modulus: int
    pairs: tuple[tuple[int, int], ...]
    c_sign: int
    c_offset: int
    c_modulus: int
    extra: Optional[Callable[[int, int, int], bool]] = None
    subcase_of: Optional[Callable[[int, int, int], Optional[str]]] = None
    base_mod: Optional[tuple[int, tuple[int, int]]] = None  # (p, (a mod p, b mod p))

    def _c_ok(self, a, b, c) -> bool:
        return (c - self.c_sign * (a + b) - self.c_offset) % self.c_modulus == 0

    def matches(self, a, b, c) -> bool:
        m = self.modulus
        if (a % m, b % m) not in set(self.pairs) or not self._c_ok(a, b, c):
            return False
        return self.extra is None or self.extra(a, b, c)

    def subcase(self, a, b, c):
        return self.subcase_of(a, b, c) if self.subcase_of else None

    def classes(self) -> list:
        return list(self.pairs)

    def _draw(self, pair, rng):
        a, b = _lift(pair[0], self.modulus, rng), _lift(pair[1], self.modulus, rng)
        c0 = (self.c_sign * (a + b) + self.c_offset) % self.c_modulus
        return a, b, _lift(c0, self.c_modulus, rng)

    def sample(self, cls, rng):
        for _ in range(MAX_REJECTIONS):
            a, b, c = self._draw(cls, rng)
            if c != 0 and b != 0 and self.matches(a, b, c):
                return a, b, c
        raise SynthesisError(f"no lift of {cls} satisfies {self.key}")

    def probe_space(self):
        if self.base_mod is None:
            return None
        p, (ra, rb) = self.base_mod
        inside = set(self.pairs)
        m = self.modulus
        return (
            (x, y)
            for x in range(ra % p, m, p)
            for y in range(rb % p, m, p)
            if (x, y) not in inside
        )

    def probe_sample(self, cls, rng):
        for _ in range(200):
            a, b, c = self._draw(cls, rng)
            if self.extra is None or self.extra(a, b, c):
                return a, b, c
        return None


@dataclass(kw_only=True)
class SynthCase(FamilyCase):
    params: tuple
    synth: Callable[[tuple, random.Random], tuple[int, int, int]]
    condition: Callable[[int, int, int], bool]
    subcase_of: Optional[Callable[[int, int, int], Optional[str]]] = None

    def matches(self, a, b, c) -> bool:
        return self.condition(a, b, c)

    def subcase(self, a, b, c):
        return self.subcase_of(a, b, c) if self.subcase_of else None

    def classes(self) -> list:
        return list(self.params)

    def sample(self, cls, rng):
        for _ in range(MAX_REJECTIONS):
            a, b, c = self.synth(cls, rng)
            if b != 0 and c != 0 and self.condition(a, b, c):
                return a, b, c
        raise SynthesisError(f"no witness for parameters {cls} of {self.key}")


# ---------------------------------------------------------------------------
# p = 2

T1_C1 = ((1, 3, 7), (1, 7, 3), (3, 1, 7), (3, 5, 3), (5, 3, 3), (5, 7, 7), (7, 1, 3), (7, 5, 7))

# (19, 7, 21) occurs twice in the case list and is stored once; (19, 31, 29)
# completes the a = 19 row of the pattern but is absent (see the probe).
T1_C2 = (
    (1, 5, 9), (1, 13, 1), (1, 21, 25), (1, 29, 17), (5, 1, 9), (5, 9, 1), (5, 17, 25), (5, 25, 17),
    (9, 5, 1), (9, 13, 25), (9, 21, 17), (9, 29, 9), (13, 1, 1), (13, 9, 25), (13, 17, 17), (13, 25, 9),
    (17, 5, 25), (17, 13, 17), (17, 21, 9), (17, 29, 1), (21, 1, 25), (21, 9, 17), (21, 17, 9), (21, 25, 1),
    (25, 5, 17), (25, 13, 9), (25, 21, 1), (25, 29, 25), (29, 1, 17), (29, 9, 9), (29, 17, 1), (29, 25, 25),
    (3, 7, 5), (3, 15, 29), (3, 23, 21), (3, 31, 13), (7, 3, 5), (7, 11, 29), (7, 19, 21), (7, 27, 13),
    (11, 7, 29), (11, 15, 21), (11, 23, 13), (11, 31, 5), (15, 3, 29), (15, 11, 21), (15, 19, 13), (15, 27, 5),
    (19, 7, 21), (19, 23, 5), (19, 15, 13), (23, 3, 21), (23, 11, 13), (23, 19, 5), (23, 27, 29),
    (27, 7, 13), (27, 15, 5), (27, 23, 29), (27, 31, 21), (31, 3, 13), (31, 11, 5), (31, 19, 29), (31, 27, 21),
)

T1_C3 = ((0, 0, 15), (0, 8, 7), (4, 4, 7), (4, 12, 15), (8, 0, 7), (8, 8, 15), (12, 4, 15), (12, 12, 7))
T1_C4 = ((0, 4), (4, 8), (8, 12), (12, 0))
T1_C5 = ((2, 6), (10, 14), (18, 22), (26, 30))
T1_C6 = ((6, 42), (22, 122), (38, 74), (54, 26), (70, 106), (86, 58), (102, 10), (118, 90))


def _all_odd(a, b, c):
    return a % 2 == 1 and b % 2 == 1 and c % 2 == 1


def _x_minus_1_fourth(a, b, c):
    return a % 2 == 0 and b % 2 == 0 and c % 2 == 1


def _mu_nu_2(a, b, c):
    return v2(1 + a + b + c), v2(4 + 3 * a + b)


def _t1c7(a, b, c):
    if (a % 16, b % 16, c % 16) != (6, 10, 15):
        return False
    mu, nu = _mu_nu_2(a, b, c)
    return mu is not INF and mu > 7 and mu % 2 == 0 and 2 * nu > mu + 3


def _t1c8(a, b, c):
    if (a % 16, b % 16, c % 16) != (6, 10, 15):
        return False
    mu, nu = _mu_nu_2(a, b, c)
    return mu is not INF and nu > 5 and 2 * nu < mu + 3


def _x_cubed_pre(a, b, c) -> bool:
    """F = x^3 (x - 1) mod 2 with 3 v2(b) < 2 v2(c)."""
    if a % 2 == 0 or b == 0 or c == 0 or b % 2 or c % 2:
        return False
    return 3 * v2(b) < 2 * v2(c)


def _t1c9(a, b, c):
    return _x_cubed_pre(a, b, c) and v2(b) % 2 == 1


def _t1c10(a, b, c):
    if not _x_cubed_pre(a, b, c) or b % 8 != 4:
        return False
    return (a * unit_part(b, 2) + 1) % 4 == 0 and c % 32 == 0


def _t1c11(a, b, c):
    if not _x_cubed_pre(a, b, c) or b % 8 != 4:
        return False
    return (a * unit_part(b, 2) + 1) % 4 == 2 and c % 32 == 16


def _t1c12(a, b, c):
    if not _x_cubed_pre(a, b, c) or b % 8 != 4 or c % 32 != 16:
        return False
    b2, c2 = unit_part(b, 2), unit_part(c, 2)
    return (a * b2 + 1) % 8 == 0 and (b2**4 + c2) % 4 == 0


def _even_k(b):
    vb = v2(b)
    return vb // 2 if vb % 2 == 0 and vb >= 4 else None


def _t1c13(a, b, c):
    if not _x_cubed_pre(a, b, c):
        return False
    k = _even_k(b)
    return k is not None and (a * unit_part(b, 2) + 1) % 4 == 0 and v2(c) == 3 * k + 1


def _t1c14(a, b, c):
    if not _x_cubed_pre(a, b, c):
        return False
    k = _even_k(b)
    return k is not None and (a * unit_part(b, 2) + 1) % 4 == 2 and v2(c) - 3 * k >= 2


def _t1c15(a, b, c):
    if not _x_cubed_pre(a, b, c):
        return False
    k = _even_k(b)
    if k is None:
        return False
    b2, c2 = unit_part(b, 2), unit_part(c, 2)
    if (a * b2 + 1) % 4:
        return False
    l = v2(c) - 3 * k
    if l < 2:
        return False
    return (2 ** (k - 2) * b2**4 + b2**2 * ((a * b2 + 1) // 4) + 2 ** (l - 2) * c2) % 2 == 0


def _tau_l(c: int, variant: str) -> int:
    """l in v2(c) = 2 + l, or in v2(c) = 3 + l for the ``shifted`` reading."""
    return v2(c) - (3 if variant == "shifted" else 2)


def tau_sigma(a: int, b: int, c: int, variant: str = DEFAULT_TAU_VARIANT):
    """(tau, sigma) for the b = 4 mod 8, a b_2 + 1 = 2 mod 4 cases.

    ``statement`` and ``proof`` are the two written forms of tau with
    v2(c) = 2 + l.  ``shifted`` is the statement form with l taken from
    v2(c) = 3k + l at k = 1, and ``development`` is v2(F(2 b_2)) - 4, the
    quantity the polygon argument actually uses; the last two coincide.
    sigma is v2(8 b_2^2 + 3 a b_2 + 1) - 2.
    """
    b2, c2 = unit_part(b, 2), unit_part(c, 2)
    l = _tau_l(c, variant)
    if variant in ("statement", "shifted"):
        tau = v2(b2**4 + b2**2 * ((a * b2 + 1) // 2) + 2 ** (l - 1) * c2)
    elif variant == "proof":
        tau = v2(b2**4 + b2 * ((a * b2 + 1) // 2) + 2 ** (l - 1) * c2)
    elif variant == "development":
        s = 2 * b2
        tau = v2(s**4 + a * s**3 + b * s + c) - 4
    else:
        raise ValueError(f"unknown tau variant {variant!r}")
    sigma = v2(8 * b2**2 + 3 * a * b2 + 1) - 2
    return tau, sigma


def _t1c16_17_pre(a, b, c, variant):
    if not _x_cubed_pre(a, b, c) or b % 8 != 4:
        return False
    return (a * unit_part(b, 2) + 1) % 4 == 2 and _tau_l(c, variant) >= 2


def _t1c16(variant):
    def cond(a, b, c):
        if not _t1c16_17_pre(a, b, c, variant):
            return False
        tau, sigma = tau_sigma(a, b, c, variant)
        return tau is not INF and tau < 3 + 2 * sigma and tau % 2 == 0

    return cond


def _t1c17(variant):
    def cond(a, b, c):
        if not _t1c16_17_pre(a, b, c, variant):
            return False
        tau, sigma = tau_sigma(a, b, c, variant)
        return tau is not INF and tau > 3 + 2 * sigma

    return cond


def _synth_c78(params, rng):
    mu, nu = params
    a = _lift(6, 16, rng)
    b = 2**nu * _odd(rng) - 4 - 3 * a
    c = 2**mu * _odd(rng) - 1 - a - b
    return a, b, c


def _synth_c9(params, rng):
    vb, vc = params
    return _odd(rng), 2**vb * _odd(rng), 2**vc * _odd(rng)


def _a_with_ab2_plus_1(b2: int, target_mod4: int, rng) -> int:
    # b2 is its own inverse mod 4
    r = ((target_mod4 - 1) * b2) % 4
    return _lift(r, 4, rng)


def _synth_c13(params, rng):
    (k,) = params
    b2 = _odd(rng)
    return _a_with_ab2_plus_1(b2, 0, rng), 2 ** (2 * k) * b2, 2 ** (3 * k + 1) * _odd(rng)


def _synth_c14_15(target):
    def synth(params, rng):
        k, l = params
        b2 = _odd(rng)
        return _a_with_ab2_plus_1(b2, target, rng), 2 ** (2 * k) * b2, 2 ** (3 * k + l) * _odd(rng)

    return synth


def _synth_c16_17(variant):
    offset = 3 if variant == "shifted" else 2

    def synth(params, rng):
        (l,) = params
        b2 = _odd(rng)
        return _a_with_ab2_plus_1(b2, 2, rng), 4 * b2, 2 ** (offset + l) * _odd(rng)

    return synth


def theorem1_cases(tau_variant: str = DEFAULT_TAU_VARIANT) -> list[FamilyCase]:
    if tau_variant not in TAU_VARIANTS:
        raise ValueError(f"unknown tau variant {tau_variant!r}")
    p, cases = 2, []
    cases.append(ResidueCase(theorem=1, number=1, prime=p, nu=1, shape=SHAPE_2_2, moduli=(8, 8, 8), listed=T1_C1, base=_all_odd))
    cases.append(
        ResidueCase(
            theorem=1, number=2, prime=p, nu=1, shape=SHAPE_2_2, moduli=(32, 32, 32), listed=T1_C2, base=_all_odd,
            note="(19, 7, 21) listed twice, stored once; (19, 31, 29) absent",
        )
    )
    cases.append(ResidueCase(theorem=1, number=3, prime=p, nu=1, shape=SHAPE_1_1_1e2, moduli=(16, 16, 16), listed=T1_C3, base=_x_minus_1_fourth))
    cases.append(PairCase(theorem=1, number=4, prime=p, nu=1, shape=SHAPE_1_1_1e2, modulus=16, pairs=T1_C4, c_sign=-1, c_offset=-1, c_modulus=64, base_mod=(2, (0, 0))))
    cases.append(PairCase(theorem=1, number=5, prime=p, nu=1, shape=SHAPE_2_2, modulus=32, pairs=T1_C5, c_sign=-1, c_offset=63, c_modulus=128, base_mod=(2, (0, 0))))
    cases.append(PairCase(theorem=1, number=6, prime=p, nu=2, shape=SHAPE_1_1_1_1, modulus=128, pairs=T1_C6, c_sign=-1, c_offset=-1, c_modulus=1024, base_mod=(2, (0, 0))))
    cases.append(
        SynthCase(
            theorem=1, number=7, prime=p, nu=1, shape=SHAPE_1_1_1e2, condition=_t1c7, synth=_synth_c78,
            params=((8, 6), (8, 7), (10, 7), (10, 8), (12, 8), (12, 9)),
            note="mu, nu as defined in case (8)",
        )
    )
    cases.append(
        SynthCase(
            theorem=1, number=8, prime=p, nu=2, shape=SHAPE_1_1_1_1, condition=_t1c8, synth=_synth_c78,
            params=((10, 6), (13, 6), (12, 7), (15, 7), (14, 8), (17, 8)),
        )
    )
    cases.append(
        SynthCase(
            theorem=1, number=9, prime=p, nu=1, shape=SHAPE_1_1_1e2, condition=_t1c9, synth=_synth_c9,
            params=((1, 2), (1, 4), (3, 5), (3, 7), (5, 8), (5, 10)),
        )
    )
    cases.append(ResidueCase(theorem=1, number=10, prime=p, nu=1, shape=SHAPE_1_1_1e2, moduli=(4, 16, 32), condition=_t1c10))
    cases.append(ResidueCase(theorem=1, number=11, prime=p, nu=1, shape=SHAPE_1_1_1e2, moduli=(4, 16, 32), condition=_t1c11))
    cases.append(ResidueCase(theorem=1, number=12, prime=p, nu=2, shape=SHAPE_1_1_1_1, moduli=(8, 32, 64), condition=_t1c12))
    cases.append(SynthCase(theorem=1, number=13, prime=p, nu=1, shape=SHAPE_1_1_1e2, condition=_t1c13, synth=_synth_c13, params=((2,), (3,), (4,))))
    cases.append(
        SynthCase(
            theorem=1, number=14, prime=p, nu=1, shape=SHAPE_1_1_1e2, condition=_t1c14, synth=_synth_c14_15(2),
            params=((2, 2), (2, 3), (3, 2), (3, 4)),
        )
    )
    cases.append(
        SynthCase(
            theorem=1, number=15, prime=p, nu=2, shape=SHAPE_1_1_1_1, condition=_t1c15, synth=_synth_c14_15(0),
            params=((2, 2), (2, 3), (3, 2), (3, 4)),
        )
    )
    cases.append(
        SynthCase(
            theorem=1, number=16, prime=p, nu=1, shape=SHAPE_1_1_1e2, condition=_t1c16(tau_variant), synth=_synth_c16_17(tau_variant),
            params=((2,), (3,), (4,), (5,)), variant=tau_variant,
        )
    )
    cases.append(
        SynthCase(
            theorem=1, number=17, prime=p, nu=2, shape=SHAPE_1_1_1_1, condition=_t1c17(tau_variant), synth=_synth_c16_17(tau_variant),
            params=((2,), (3,), (4,), (5,)), variant=tau_variant,
        )
    )
    return cases


# ---------------------------------------------------------------------------
# p = 3

T2_C2 = ((0, 4), (3, 22), (6, 13), (9, 4), (12, 22), (15, 13), (18, 4), (21, 22), (24, 13))
T2_C3 = ((0, 23), (3, 14), (6, 5), (9, 23), (12, 14), (15, 5), (18, 23), (21, 14), (24, 5))
T2_C4 = ((2, 16), (5, 7), (8, 25), (11, 16), (14, 7), (17, 25), (20, 16), (23, 7), (26, 25))


def _t2c1(a, b, c):
    if a % 3 == 0 or b == 0 or c == 0 or b % 3 or c % 3:
        return False
    vb = v3(b)
    return 3 * vb < 2 * v3(c) and vb % 2 == 0 and (unit_part(b, 3) + a) % 3 == 0


def _polygon_subcase(lead: int, middle: int) -> Optional[str]:
    """(i) 2 nu < mu + 1, or (ii) 2 nu > mu + 1 with mu odd and unit part 1 mod 3,
    where mu = v3(lead), nu = v3(middle)."""
    if lead == 0:
        return None
    mu, nu = v3(lead), v3(middle)
    if 2 * nu < mu + 1:
        return "i"
    if 2 * nu > mu + 1 and mu % 2 == 1 and unit_part(lead, 3) % 3 == 1:
        return "ii"
    return None


def _t2c2_sub(a, b, c):
    return _polygon_subcase(1 - a - b + c, -4 + 3 * a + b)


def _t2c3_sub(a, b, c):
    return _polygon_subcase(1 + a + b + c, 4 + 3 * a + b)


def _synth_t2c1(params, rng):
    vb, vc = params
    a = _unit(3, rng)
    return a, 3**vb * _unit(3, rng, -a), 3**vc * _unit(3, rng)


def theorem2_cases(case3_modulus: int = DEFAULT_CASE3_MODULUS) -> list[FamilyCase]:
    if case3_modulus not in T2_CASE3_MODULI:
        raise ValueError(f"case (3) modulus must be one of {T2_CASE3_MODULI}")
    p, cases = 3, []
    cases.append(
        SynthCase(
            theorem=2, number=1, prime=p, nu=1, shape=SHAPE_1_1_1_1, condition=_t2c1, synth=_synth_t2c1,
            params=((2, 4), (2, 5), (4, 7), (4, 9)),
        )
    )
    cases.append(
        PairCase(
            theorem=2, number=2, prime=p, nu=1, shape=SHAPE_1_1_1_1, modulus=27, pairs=T2_C2, c_sign=1, c_offset=-1, c_modulus=243,
            extra=lambda a, b, c: _t2c2_sub(a, b, c) is not None, subcase_of=_t2c2_sub, base_mod=(3, (0, 1)),
        )
    )
    cases.append(
        PairCase(
            theorem=2, number=3, prime=p, nu=1, shape=SHAPE_1_1_1_1, modulus=case3_modulus, pairs=T2_C3, c_sign=-1, c_offset=-1, c_modulus=243,
            extra=lambda a, b, c: _t2c3_sub(a, b, c) is not None, subcase_of=_t2c3_sub, base_mod=(3, (0, 2)),
            variant=f"mod{case3_modulus}",
            note="pairs given mod 243 with all entries below 27; mod 27 is the default reading",
        )
    )
    cases.append(PairCase(theorem=2, number=4, prime=p, nu=1, shape=SHAPE_1_1_1_1, modulus=27, pairs=T2_C4, c_sign=1, c_offset=-1, c_modulus=81, base_mod=(3, (2, 1))))
    return cases


def get_case(theorem: int, number: int, tau_variant: str = DEFAULT_TAU_VARIANT, case3_modulus: int = DEFAULT_CASE3_MODULUS) -> FamilyCase:
    if theorem == 1:
        table = theorem1_cases(tau_variant)
    elif theorem == 2:
        table = theorem2_cases(case3_modulus)
    else:
        raise KeyError(f"no theorem {theorem}")
    for case in table:
        if case.number == number:
            return case
    raise KeyError(f"theorem {theorem} has no case {number}")


def all_cases(tau_variant: str = DEFAULT_TAU_VARIANT, case3_modulus: int = DEFAULT_CASE3_MODULUS) -> list[FamilyCase]:
    return theorem1_cases(tau_variant) + theorem2_cases(case3_modulus)
