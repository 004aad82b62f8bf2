"""Arithmetic of imaginary quadratic orders R_d and their plane geometry.

R_d has Z-basis {1, w} where w = sqrt(d)/2 for d = 0 mod 4 and
w = (1 + sqrt(d))/2 for d = 1 mod 4 (d < 0 throughout).  Elements are
integer pairs u + v*w; the norm form is

    u**2 + (|d|/4) v**2          (d = 0 mod 4)
    u**2 + u v + ((1-d)/4) v**2  (d = 1 mod 4)

All geometry (closest lattice point, covering radii, disks) is done over
exact rationals in the same (u, v) coordinates, so the reduction bounds in
the hermitian-form module are compared exactly, never through floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import ceil_minus_sqrt, floor_plus_sqrt, is_square, isqrt

__all__ = [
    "MixedDiscriminants",
    "QuadOrder",
    "OrderElement",
    "norm_uv",
    "represents_norm",
    "norm_representations",
    "class_number",
    "covering_radius_sq",
    "closest_element",
    "elements_in_disk",
    "units",
]


class MixedDiscriminants(ValueError):
    pass


def _check_disc(d: int) -> None:
    if d >= 0 or d % 4 not in (0, 1):
        raise ValueError(f"{d} is not a negative quadratic discriminant (need d < 0, d = 0,1 mod 4)")


def norm_uv(d: int, u, v):
    """Norm form of R_d; works for integer or Fraction coordinates."""
    if d % 4 == 0:
        return u * u + (-d // 4) * v * v
    return u * u + u * v + ((1 - d) // 4) * v * v


def _conj_uv(d: int, u, v):
    if d % 4 == 0:
        return (u, -v)
    return (u + v, -v)


def _mul_uv(d: int, a, b):
    if d % 4 == 0:
        return (a[0] * b[0] + (d // 4) * a[1] * b[1], a[0] * b[1] + a[1] * b[0])
    t = a[1] * b[1]
    return (a[0] * b[0] - ((1 - d) // 4) * t, a[0] * b[1] + a[1] * b[0] + t)


class OrderElement:
    """u + v*w in R_d.  Immutable; mixing discriminants raises."""

    __slots__ = ("d", "u", "v")

    def __init__(self, d: int, u: int, v: int):
        _check_disc(d)
        self.d = d
        self.u = u
        self.v = v

    def _check(self, other):
        if not isinstance(other, OrderElement):
            raise TypeError("expected an OrderElement")
        if other.d != self.d:
            raise MixedDiscriminants(f"cannot mix R_{self.d} and R_{other.d}")

    def __add__(self, other):
        self._check(other)
        return OrderElement(self.d, self.u + other.u, self.v + other.v)

    def __sub__(self, other):
        self._check(other)
        return OrderElement(self.d, self.u - other.u, self.v - other.v)

    def __neg__(self):
        return OrderElement(self.d, -self.u, -self.v)

    def __mul__(self, other):
        if isinstance(other, int):
            return OrderElement(self.d, self.u * other, self.v * other)
        self._check(other)
        u, v = _mul_uv(self.d, (self.u, self.v), (other.u, other.v))
        return OrderElement(self.d, u, v)

    __rmul__ = __mul__

    def conj(self) -> "OrderElement":
        u, v = _conj_uv(self.d, self.u, self.v)
        return OrderElement(self.d, u, v)

    def norm(self) -> int:
        return norm_uv(self.d, self.u, self.v)

    def trace(self) -> int:
        return 2 * self.u if self.d % 4 == 0 else 2 * self.u + self.v

    def __eq__(self, other):
        return (
            isinstance(other, OrderElement)
            and (other.d, other.u, other.v) == (self.d, self.u, self.v)
        )

    def __hash__(self):
        return hash((self.d, self.u, self.v))

    def __bool__(self):
        return bool(self.u or self.v)

    def __repr__(self):
        return f"OrderElement(d={self.d}, u={self.u}, v={self.v})"


class QuadOrder:
    """Thin handle on R_d: element factory plus the order constants."""

    __slots__ = ("d",)

    def __init__(self, d: int):
        _check_disc(d)
        self.d = d

    def element(self, u: int, v: int = 0) -> OrderElement:
        return OrderElement(self.d, u, v)

    @property
    def zero(self) -> OrderElement:
        return OrderElement(self.d, 0, 0)

    @property
    def one(self) -> OrderElement:
        return OrderElement(self.d, 1, 0)

    @property
    def omega(self) -> OrderElement:
        return OrderElement(self.d, 0, 1)

    def __repr__(self):
        return f"QuadOrder(d={self.d})"


def norm_representations(d: int, n: int) -> list[OrderElement]:
    """All elements of R_d of norm exactly n, sorted by (u, v)."""
    _check_disc(d)
    if n < 0:
        return []
    if n == 0:
        return [OrderElement(d, 0, 0)]
    out = []
    vmax = isqrt(4 * n // (-d)) + 1
    for v in range(-vmax, vmax + 1):
        if d % 4 == 0:
            rem = n - (-d // 4) * v * v
            if rem < 0 or not is_square(rem):
                continue
            r = isqrt(rem)
            for u in {r, -r}:
                out.append(OrderElement(d, u, v))
        else:
            # u = (-v +- s)/2 with s**2 = 4n + d v**2
            disc = 4 * n + d * v * v
            if disc < 0 or not is_square(disc):
                continue
            s = isqrt(disc)
            if (s - v) % 2:
                continue
            for sign in {s, -s}:
                out.append(OrderElement(d, (-v + sign) // 2, v))
    uniq = sorted({(el.u, el.v) for el in out})
    return [OrderElement(d, u, v) for u, v in uniq]


def represents_norm(d: int, n: int):
    """First element of norm n, or None when n is not represented."""
    reps = norm_representations(d, n)
    return reps[0] if reps else None


@lru_cache(maxsize=None)
def units(d: int) -> tuple[OrderElement, ...]:
    """Norm-1 elements: 6 for d = -3, 4 for d = -4, otherwise {1, -1}."""
    return tuple(norm_representations(d, 1))


@lru_cache(maxsize=None)
def class_number(d: int) -> int:
    """h(d) by counting reduced primitive forms (A, B, C) of discriminant d:
    B**2 - 4AC = d, |B| <= A <= C, gcd(A,B,C) = 1, and B >= 0 whenever
    |B| = A or A = C."""
    from math import gcd

    _check_disc(d)
    count = 0
    bmax = isqrt(-d // 3)
    for b in range(-bmax, bmax + 1):
        if (b - d) % 2:
            continue
        ac4 = b * b - d
        if ac4 % 4:
            continue
        ac = ac4 // 4
        a = max(abs(b), 1)
        while a * a <= ac:
            if a >= abs(b) and ac % a == 0:
                c = ac // a
                if gcd(gcd(a, abs(b)), c) == 1:
                    if b >= 0 or (abs(b) != a and a != c):
                        count += 1
            a += 1
    return count


@lru_cache(maxsize=None)
def covering_radius_sq(d: int) -> Fraction:
    """Squared covering radius of the lattice R_d in the plane.

    d = 1 mod 4: the deep hole sits at (1/2, (|d|-1)/(4 sqrt(|d|))) in
    xy-coordinates, at squared distance ((|d|+1)/4)**2 / |d|.
    d = 0 mod 4: rectangular lattice Z + Z*(sqrt(|d|)/2)i, deep hole at the
    cell center, squared distance 1/4 + |d|/16.
    """
    _check_disc(d)
    if d % 4 == 0:
        return Fraction(1, 4) + Fraction(-d, 16)
    return Fraction(-d + 1, 4) ** 2 / (-d)


def elements_in_disk(d: int, zu: Fraction, zv: Fraction, r2: Fraction) -> list[OrderElement]:
    """All r in R_d with |z - r|**2 <= r2, z given in rational (u, v) coordinates.

    The norm form bounds v first ((|d|/4)(v - zv)**2 <= r2), then each v
    leaves an exact rational interval for u.
    """
    _check_disc(d)
    if r2 < 0:
        return []
    zu, zv = Fraction(zu), Fraction(zv)
    out = []
    vf = Fraction(4) * r2 / (-d)
    for v in range(ceil_minus_sqrt(zv, vf), floor_plus_sqrt(zv, vf) + 1):
        rest = r2 - Fraction(-d, 4) * (v - zv) ** 2
        if rest < 0:
            continue
        # center of the u-interval: zu for d=0 mod 4, zu + (zv - v)/2 otherwise
        c = zu if d % 4 == 0 else zu + (zv - v) / 2
        for u in range(ceil_minus_sqrt(c, rest), floor_plus_sqrt(c, rest) + 1):
            if norm_uv(d, u - zu, v - zv) <= r2:
                out.append(OrderElement(d, u, v))
    out.sort(key=lambda el: (el.u, el.v))
    return out


def _floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


def closest_element(d: int, zu: Fraction, zv: Fraction) -> OrderElement:
    """Element of R_d minimizing |z - r|**2, ties broken by smallest (u, v).

    The norm form is diagonal in v, so only v within one unit of zv can
    minimize, and for each v the optimal u is one of the two integers
    around the per-v center.  All comparisons stay exact rationals.
    """
    zu, zv = Fraction(zu), Fraction(zv)
    v0 = _floor_frac(zv)
    best = None
    for v in range(v0 - 1, v0 + 3):
        c = zu if d % 4 == 0 else zu + (zv - v) / 2
        u0 = _floor_frac(c)
        for u in (u0, u0 + 1):
            dist = norm_uv(d, u - zu, v - zv)
            key = (dist, u, v)
            if best is None or key < best:
                best = key
    return OrderElement(d, best[1], best[2])
