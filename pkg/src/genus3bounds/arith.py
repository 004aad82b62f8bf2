"""Exact integer and finite-field arithmetic shared by the other modules.

Integers are arbitrary precision throughout (the diophantine searches walk
powers like 5**1599).  Finite fields are small by design: everything in scope
fits in q <= 2**20, so field elements are coefficient tuples over F_p reduced
against a monic irreducible modulus, with no attempt at asymptotic cleverness.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import isqrt

__all__ = [
    "NotAPrimePower",
    "ReducibleModulus",
    "FieldTooLarge",
    "PrimePower",
    "FiniteField",
    "FieldElement",
    "isqrt",
    "is_square",
    "is_prime",
    "integer_nthroot",
    "factor_prime_power",
    "field_make",
    "floor_plus_sqrt",
    "ceil_minus_sqrt",
]

MAX_FIELD_SIZE = 1 << 20


class NotAPrimePower(ValueError):
    pass


class ReducibleModulus(ValueError):
    pass


class FieldTooLarge(ValueError):
    pass


# small primes used both for trial division and as Miller-Rabin witnesses;
# this witness set is deterministic for n < 3.3 * 10**24, far beyond the
# q < 2**64 primality scope.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the integer sizes in scope."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def integer_nthroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0, exact for arbitrary precision."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return isqrt(n)
    lo, hi = 0, 1 << (n.bit_length() // k + 1)  # hi**k > n by construction
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def floor_plus_sqrt(c: Fraction, f: Fraction) -> int:
    """Largest integer n with n <= c + sqrt(f), for rational c and f >= 0.

    Used to turn irrational interval endpoints into exact integer loop
    bounds; the float seed is corrected by exact rational comparisons.
    """
    if f < 0:
        raise ValueError("negative radicand")
    n = int(c) + isqrt(f.numerator // f.denominator) + 2

    def ok(m: int) -> bool:
        t = m - c
        return t <= 0 or t * t <= f

    while not ok(n):
        n -= 1
    while ok(n + 1):
        n += 1
    return n


def ceil_minus_sqrt(c: Fraction, f: Fraction) -> int:
    """Smallest integer n with n >= c - sqrt(f), for rational c and f >= 0."""
    return -floor_plus_sqrt(-c, f)


class PrimePower:
    """A prime power q = p**e with the factorization certified at build time."""

    __slots__ = ("p", "e", "q")

    def __init__(self, p: int, e: int):
        if e < 1 or not is_prime(p):
            raise NotAPrimePower(f"{p}**{e} is not a valid prime power")
        self.p = p
        self.e = e
        self.q = p**e

    def __eq__(self, other):
        return isinstance(other, PrimePower) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def __repr__(self):
        return f"PrimePower(p={self.p}, e={self.e})"


def factor_prime_power(n: int) -> PrimePower:
    """Write n = p**e with p prime, or raise NotAPrimePower."""
    if n < 2:
        raise NotAPrimePower(f"{n} is not a prime power")
    for e in range(n.bit_length(), 0, -1):
        r = integer_nthroot(n, e)
        if r**e == n and is_prime(r):
            return PrimePower(r, e)
    raise NotAPrimePower(f"{n} is not a prime power")


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (integer coefficient lists, low->high)


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_rem(prod, mod, p)


def _poly_rem(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(a) > dm:
        coef = a.pop() * inv_lead % p
        if coef:
            off = len(a) - dm
            for i in range(dm):
                a[off + i] = (a[off + i] - coef * mod[i]) % p
    return _poly_trim(a)


def _poly_powmod(base, n, mod, p):
    result = [1]
    base = _poly_rem(base, mod, p)
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        n >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        inv_lead = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b):
            coef = r[-1] * inv_lead % p
            off = len(r) - len(b)
            for i in range(len(b)):
                r[off + i] = (r[off + i] - coef * b[i]) % p
            _poly_trim(r)
            if not r:
                break
        a, b = b, r
    return a


def _is_irreducible(modulus, p) -> bool:
    """Irreducibility over F_p: root test suffices for degree <= 3, the
    standard x**(p**(e/l)) criterion handles higher degrees."""
    e = len(modulus) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    if any(sum(c * pow(x, i, p) for i, c in enumerate(modulus)) % p == 0 for x in range(p)):
        return False
    if e <= 3:
        return True
    x = [0, 1]
    if _poly_powmod(x, p**e, modulus, p) != _poly_trim([0, 1]):
        return False
    ell = 2
    rem = e
    while rem > 1:
        if rem % ell == 0:
            xq = _poly_powmod(x, p ** (e // ell), modulus, p)
            diff = list(xq)
            while len(diff) < 2:
                diff.append(0)
            diff[1] = (diff[1] - 1) % p
            if len(_poly_gcd(diff, modulus, p)) > 1:
                return False
            while rem % ell == 0:
                rem //= ell
        ell += 1
    return True


class FieldElement:
    """Element of a FiniteField, stored as a reduced coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FiniteField", coeffs):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise ValueError("operands from different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self) -> "FieldElement":
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero field element")
        # q is small enough that Fermat's exponent beats bookkeeping an
        # extended Euclid over polynomials would need
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inv()

    def frobenius(self) -> "FieldElement":
        return self ** self.field.p

    def trace_to_prime(self) -> int:
        """Absolute trace down to F_p, returned as an integer in [0, p)."""
        acc = self
        cur = self
        for _ in range(self.field.e - 1):
            cur = cur.frobenius()
            acc = acc + cur
        assert all(c == 0 for c in acc.coeffs[1:])
        return acc.coeffs[0]

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.field is self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"FieldElement{self.coeffs}"


class FiniteField:
    """F_{p**e} presented as F_p[x]/(modulus), modulus monic irreducible.

    The default modulus is the lexicographically smallest monic irreducible:
    the one whose coefficient vector (c_0, ..., c_{e-1}), read as a base-p
    integer, is minimal.  Deterministic, so fields are reproducible across
    runs; callers may supply their own modulus to match a printed model
    (e.g. F_27 as F_3[a]/(a^3 + 2a^2 + 1)).
    """

    __slots__ = ("p", "e", "q", "modulus", "zero", "one")

    def __init__(self, p: int, e: int, modulus=None):
        pp = PrimePower(p, e)
        if pp.q > MAX_FIELD_SIZE:
            raise FieldTooLarge(f"q = {pp.q} exceeds the enumeration cap {MAX_FIELD_SIZE}")
        self.p, self.e, self.q = p, e, pp.q
        if modulus is None:
            modulus = self._default_modulus(p, e)
        else:
            modulus = [c % p for c in modulus]
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ReducibleModulus("modulus must be monic of degree e")
            if not _is_irreducible(modulus, p):
                raise ReducibleModulus(f"supplied modulus {modulus} is reducible over F_{p}")
        self.modulus = tuple(modulus)
        self.zero = FieldElement(self, (0,) * e)
        self.one = FieldElement(self, (1,) + (0,) * (e - 1))

    @staticmethod
    def _default_modulus(p, e):
        for k in range(p**e):
            coeffs = []
            kk = k
            for _ in range(e):
                coeffs.append(kk % p)
                kk //= p
            candidate = coeffs + [1]
            if _is_irreducible(candidate, p):
                return candidate
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _mul(self, a, b):
        e, p = self.e, self.p
        if e == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        mod = self.modulus
        while len(prod) > e:
            lead = prod.pop()
            if lead:
                off = len(prod) - e
                for i in range(e):
                    prod[off + i] = (prod[off + i] - lead * mod[i]) % p
        return tuple(prod)

    def element(self, coeffs) -> FieldElement:
        """Build an element from an integer (prime subfield) or coefficient list."""
        if isinstance(coeffs, FieldElement):
            if coeffs.field is not self:
                raise ValueError("element belongs to a different field")
            return coeffs
        if isinstance(coeffs, int):
            return FieldElement(self, (coeffs % self.p,) + (0,) * (self.e - 1))
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients")
        return FieldElement(self, coeffs)

    def generator(self) -> FieldElement:
        """The class of x, a root of the modulus (zero when e = 1)."""
        if self.e == 1:
            return self.zero
        return FieldElement(self, (0, 1) + (0,) * (self.e - 2))

    def enumerate_all(self):
        for coeffs in itertools.product(range(self.p), repeat=self.e):
            yield FieldElement(self, coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (other.p, other.e, other.modulus) == (self.p, self.e, self.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"FiniteField(p={self.p}, e={self.e}, modulus={list(self.modulus)})"


def field_make(p: int, e: int, modulus=None) -> FiniteField:
    """Construct F_{p**e}; see FiniteField for the modulus convention."""
    return FiniteField(p, e, modulus)
