"""Arbitrary-precision diophantine scans behind the divisibility propositions.

Equations of the shape p**e = x**2 + x + a reduce to a perfect-square test on
4 p**e - (4a - 1); p**e = x**2 + c to one on p**e - c.  Scans are bounded and
say so: a SolutionSet records its exponent bound and whether it is exhaustive
within it.  Emptiness for all exponents can be certified only by a modular
obstruction (the residues of p**e mod M avoid the values of the quadratic
mod M), never by the scan alone; completeness claims beyond the bound in the
literature (Nagell-Ljunggren, Apery) are carried as provenance notes, not
re-proved here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import is_square, isqrt
from .serre import decompose

__all__ = [
    "SolutionSet",
    "DivisibilityReport",
    "solve_pow_eq_quadratic",
    "solve_x2_plus_c",
    "mod_obstruction",
    "check_5e_family",
    "divisibility_report",
]


@dataclass(frozen=True)
class SolutionSet:
    """Solutions (e, x) of one equation family, exhaustive within e <= e_max."""

    family: str
    params: dict
    solutions: tuple
    e_max: int
    exhaustive_within_bound: bool = True
    notes: tuple = ()

    def __post_init__(self):
        for e, x in self.solutions:
            if not self._satisfies(e, x):
                raise ValueError(f"({e}, {x}) does not satisfy {self.family} {self.params}")

    def _satisfies(self, e: int, x: int) -> bool:
        p = self.params["p"]
        if self.family == "pow-eq-x2xa":
            return p**e == x * x + x + self.params["a"]
        if self.family == "pow-eq-x2-plus-c":
            return p**e == x * x + self.params["c"]
        if self.family == "5e-x2x3":
            return 5**e == x * x + x + 3 and e % 2 == 1 and e >= 3
        raise ValueError(f"unknown family {self.family!r}")

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": dict(sorted(self.params.items())),
            "solutions": [list(s) for s in self.solutions],
            "e_max": self.e_max,
            "exhaustive_within_bound": self.exhaustive_within_bound,
            "notes": list(self.notes),
        }


def solve_pow_eq_quadratic(p: int, a_target: int, e_max: int, odd_only: bool = False) -> SolutionSet:
    """All (e, x), 1 <= e <= e_max, x >= 0, with p**e = x**2 + x + a_target.

    x**2 + x + a = p**e iff (2x + 1)**2 = 4 p**e - (4a - 1); only the
    nonnegative x of each solution pair {x, -x-1} is reported.  odd_only
    restricts to odd exponents, matching the propositions this scan backs
    (for a = 3 that drops the stray 3**2 = 2**2 + 2 + 3, whose q = 9 falls
    outside the canonical a <= x decomposition anyway).
    """
    if e_max < 1:
        raise ValueError("e_max must be >= 1")
    sols = []
    pe = 1
    for e in range(1, e_max + 1):
        pe *= p
        if odd_only and e % 2 == 0:
            continue
        square = 4 * pe - (4 * a_target - 1)
        if square >= 0 and is_square(square):
            s = isqrt(square)
            if s % 2 == 1:
                sols.append((e, (s - 1) // 2))
    notes = ("odd exponents only",) if odd_only else ()
    return SolutionSet("pow-eq-x2xa", {"p": p, "a": a_target}, tuple(sols), e_max, notes=notes)


def solve_x2_plus_c(c: int, p: int, e_max: int) -> SolutionSet:
    """All (e, x), 1 <= e <= e_max, x >= 0, with p**e = x**2 + c."""
    if e_max < 1:
        raise ValueError("e_max must be >= 1")
    sols = []
    pe = 1
    for e in range(1, e_max + 1):
        pe *= p
        rest = pe - c
        if rest >= 0 and is_square(rest):
            sols.append((e, isqrt(rest)))
    return SolutionSet("pow-eq-x2-plus-c", {"p": p, "c": c}, tuple(sols), e_max)


def mod_obstruction(p: int, c: int, modulus: int) -> bool:
    """True iff p**e = x**2 + x + c has no solution modulo the given modulus
    for any e >= 1 -- a certificate of emptiness for ALL exponents.

    The powers of p mod M form a finite cycle; the test checks that cycle is
    disjoint from the value set of x**2 + x + c mod M.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    powers = set()
    v = p % modulus
    while v not in powers:
        powers.add(v)
        v = v * p % modulus
    values = {(x * x + x + c) % modulus for x in range(modulus)}
    return not (powers & values)


def check_5e_family(e_max: int, require_congruence: bool = True) -> SolutionSet:
    """Scan 5**e = x**2 + x + 3 for odd e, 3 <= e <= e_max, keeping (when
    require_congruence) only solutions with 5 | 2x - 1.  Expected empty; each
    step is one big-integer square root."""
    if e_max < 1:
        raise ValueError("e_max must be >= 1")
    sols = []
    pe = 125
    for e in range(3, e_max + 1, 2):
        if e > 3:
            pe *= 25
        square = 4 * pe - 11
        if is_square(square):
            s = isqrt(square)
            if s % 2 == 1:
                x = (s - 1) // 2
                if not require_congruence or (2 * x - 1) % 5 == 0:
                    sols.append((e, x))
    notes = () if require_congruence else ("congruence 5 | 2x-1 not enforced",)
    return SolutionSet("5e-x2x3", {"p": 5}, tuple(sols), e_max, notes=notes)


EXCEPTION_Q3 = "EXCEPTION_Q3"
EXCEPTION_Q343 = "EXCEPTION_Q343"
EXCEPTION_Q2 = "EXCEPTION_Q2"
CAVEAT_P5 = "CAVEAT_P5"


@dataclass(frozen=True)
class DivisibilityReport:
    """gcd facts about m, m-1, m-2 versus the characteristic, with the
    exceptional-q tags the bound pipeline dispatches on."""

    q: int
    p: int
    m: int
    m_coprime: bool
    m1_coprime: bool
    m2_coprime: bool
    tags: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "m": self.m,
            "m_coprime_to_p": self.m_coprime,
            "m_minus_1_coprime_to_p": self.m1_coprime,
            "m_minus_2_coprime_to_p": self.m2_coprime,
            "tags": list(self.tags),
        }


def divisibility_report(q: int) -> DivisibilityReport:
    dec = decompose(q)
    p, m = dec.p, dec.m
    tags = []
    if q == 3:
        tags.append(EXCEPTION_Q3)
    if q == 343:
        tags.append(EXCEPTION_Q343)
    if q == 2:
        tags.append(EXCEPTION_Q2)
    if p == 5 and dec.e % 2 == 1 and dec.e >= 3:
        # genuinely open: a solution of 5**e = x**2+x+3 with 5 | 2x-1 would
        # make m-2 divisible by 5; none exists below e = 1600
        tags.append(CAVEAT_P5)
    return DivisibilityReport(
        q=q,
        p=p,
        m=m,
        m_coprime=gcd(m, p) == 1,
        m1_coprime=gcd(m - 1, p) == 1,
        m2_coprime=gcd(m - 2, p) == 1,
        tags=tuple(tags),
    )
