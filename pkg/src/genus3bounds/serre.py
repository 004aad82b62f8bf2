"""Canonical decomposition q = x**2 + x + a and the derived invariants m, d, d'.

Every prime power q >= 2 is written uniquely as q = x**2 + x + a with
x = floor(sqrt(q)) and -x <= a <= x.  From that decomposition come

    m  = floor(2 sqrt(q))    (2x for a <= 0, 2x + 1 for a > 0),
    d  = m**2 - 4q           (-4(x + a) for a <= 0, 1 - 4a for a > 0),
    d' = (m - 1)**2 - 4q = d - 2m + 1,

which drive the case analysis of the bound pipeline.  The fractional-part
test that forces the defect-2 zeta type is done in pure integer arithmetic
so it can never misclassify near the boundary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import factor_prime_power, isqrt

__all__ = [
    "PerfectSquareInput",
    "SerreDecomposition",
    "Family",
    "decompose",
    "theorem_family",
    "defect2_type_forced",
]


class PerfectSquareInput(ValueError):
    pass


class Family(enum.Enum):
    """Which special-shape family the canonical decomposition lands in.

    D3_11: q = x**2 + x + a with a in {1, 3}   (so d in {-3, -11})
    D4_8:  q = x**2 + b    with b in {1, 2}, b <= x   (so d in {-4, -8})
    OTHER: everything else (including perfect squares, where d = 0)
    """

    D3_11 = "D3_11"
    D4_8 = "D4_8"
    OTHER = "OTHER"


@dataclass(frozen=True)
class SerreDecomposition:
    q: int
    p: int
    e: int
    x: int
    a: int
    m: int
    d: int
    dprime: int

    @property
    def serre_weil_max(self) -> int:
        return self.q + 1 + 3 * self.m

    @property
    def serre_weil_min(self) -> int:
        return self.q + 1 - 3 * self.m


def decompose(q: int) -> SerreDecomposition:
    """Canonical decomposition of a prime power q >= 2."""
    pp = factor_prime_power(q)
    x = isqrt(q)
    a = q - x * x - x
    assert -x <= a <= x
    m = 2 * x if a <= 0 else 2 * x + 1
    d = -4 * (x + a) if a <= 0 else 1 - 4 * a
    # cross-check the case formulas against the direct definitions
    assert m == isqrt(4 * q)
    assert d == m * m - 4 * q
    assert d <= 0 and (d == 0) == (x * x == q)
    return SerreDecomposition(q=q, p=pp.p, e=pp.e, x=x, a=a, m=m, d=d, dprime=d - 2 * m + 1)


def theorem_family(dec: SerreDecomposition) -> Family:
    """Classify the canonical decomposition; q = 3 is D3_11 (a = 1), q = 5 is D4_8."""
    if dec.a in (1, 3):
        return Family.D3_11
    if dec.a <= 0 and dec.x + dec.a in (1, 2):
        return Family.D4_8
    return Family.OTHER


def defect2_type_forced(dec: SerreDecomposition) -> bool:
    """Exact test of {2 sqrt(q)} < sqrt(3) - 1.

    With u = m - 1 the condition is 2 sqrt(q) - u < sqrt(3); both sides are
    positive, so squaring once gives L := 4q + u**2 - 3 < 4u sqrt(q), and a
    second sign-checked squaring gives L <= 0 or L**2 < 16 u**2 q.  Equality
    cannot occur for non-square q, so the strict comparisons decide exactly.
    """
    if dec.d == 0:
        raise PerfectSquareInput(f"q = {dec.q} is a perfect square; the fractional part is 0")
    u = dec.m - 1
    ell = 4 * dec.q + u * u - 3
    return ell <= 0 or ell * ell < 16 * u * u * dec.q
