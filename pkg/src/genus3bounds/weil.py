"""Real Weil polynomials (zeta types) and admissibility of point counts.

A curve of genus g over F_q has zeta type [x_1, ..., x_g] where
x_i = -(alpha_i + conj(alpha_i)) runs over the Frobenius eigenvalue pairs;
we encode the type as the monic integer polynomial h(t) with roots x_i.
Validity demands all roots real (checked by Sturm sequences over Q) and
inside [-2 sqrt(q), 2 sqrt(q)] (checked by exact sign evaluation in
Q[sqrt(q)]; a root may sit at the endpoint only when 4q is a square).

Point counts over extensions follow from the degree-2g Frobenius
characteristic polynomial: each root x of h contributes a conjugate pair
with alpha + conj(alpha) = -x and alpha*conj(alpha) = q, and
N_r = q**r + 1 - (r-th power sum of all eigenvalues).  The power sums come
from Newton's identities on integer coefficients, so integrality of every
N_r is automatic rather than a rounding accident.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import factor_prime_power, is_square, isqrt

__all__ = [
    "RootOutOfWeilRange",
    "RealWeilPoly",
    "Violation",
    "Admissibility",
    "type_to_poly",
    "counts_from_type",
    "admissible",
    "elliptic_trace_exists",
]


class RootOutOfWeilRange(ValueError):
    pass


# -- rational polynomial helpers (tuples low -> high) -----------------------


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _deriv(c):
    return _trim(tuple(Fraction(k) * c[k] for k in range(1, len(c))))


def _divmod(a, b):
    a = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        quot[k] = f
        for i in range(len(b)):
            a[k + i] -= f * b[i]
        a.pop()
    return _trim(quot), _trim(a)


def _gcd_poly(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


def _sign_in_quad(value_pair, q):
    """Exact sign of A + B*sqrt(q) for rational A, B and a positive integer q."""
    a, b = value_pair
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    lhs, rhs = a * a, b * b * q
    if lhs == rhs:
        return 0
    # a and b have opposite signs: the larger square wins with that term's sign
    if a > 0:
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


def _eval_in_quad(coeffs, point, q):
    """Evaluate at s + t*sqrt(q) inside Q[sqrt(q)]; returns the (A, B) pair."""
    s, t = point
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = (acc[0] * s + acc[1] * t * q + c, acc[0] * t + acc[1] * s)
    return acc


def _sturm_chain(h):
    chain = [_trim(h)]
    d = _deriv(h)
    if d:
        chain.append(d)
        while True:
            rem = _divmod(chain[-2], chain[-1])[1]
            if not rem:
                break
            chain.append(tuple(-c for c in rem))
    return chain


def _sign_changes(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variation_at(chain, point, q):
    return _sign_changes([_sign_in_quad(_eval_in_quad(c, point, q), q) for c in chain])


def _variation_at_inf(chain, sign):
    return _sign_changes(
        [(1 if c[-1] > 0 else -1) * (sign ** ((len(c) - 1) % 2)) for c in chain]
    )


def _squarefree_part(coeffs):
    h = tuple(Fraction(c) for c in coeffs)
    g = _gcd_poly(h, _deriv(h))
    if len(g) <= 1:
        return h
    quot, rem = _divmod(h, g)
    assert not rem
    return quot


def _check_real_weil(coeffs, q):
    """Raise RootOutOfWeilRange unless every root is real in [-2*sqrt(q), 2*sqrt(q)]."""
    s = _squarefree_part(coeffs)
    chain = _sturm_chain(s)
    total = _variation_at_inf(chain, -1) - _variation_at_inf(chain, 1)
    if total != len(s) - 1:
        raise RootOutOfWeilRange(f"polynomial {list(coeffs)} has a non-real root")
    # strip roots sitting exactly at +-2*sqrt(q) (possible only with 4q square
    # or the factor t**2 - 4q), then count the rest strictly inside
    b_point = (Fraction(0), Fraction(2))
    while True:
        zero_at_b = _sign_in_quad(_eval_in_quad(s, b_point, q), q) == 0
        zero_at_mb = _sign_in_quad(_eval_in_quad(s, (Fraction(0), Fraction(-2)), q), q) == 0
        if zero_at_b or zero_at_mb:
            if is_square(4 * q):
                m0 = isqrt(4 * q)
                root = Fraction(m0) if zero_at_b else Fraction(-m0)
                s = _divmod(s, (-root, Fraction(1)))[0]
            else:
                s = _divmod(s, (Fraction(-4 * q), Fraction(0), Fraction(1)))[0]
            if len(s) <= 1:
                return
            continue
        break
    chain = _sturm_chain(s)
    inside = _variation_at(chain, (Fraction(0), Fraction(-2)), q) - _variation_at(chain, b_point, q)
    if inside != len(s) - 1:
        raise RootOutOfWeilRange(
            f"polynomial {list(coeffs)} has a real root outside [-2*sqrt({q}), 2*sqrt({q})]"
        )


class RealWeilPoly:
    """Monic integer polynomial of degree g in [1, 3] with all roots real in
    the Weil interval for the ambient q.  Validated on construction."""

    __slots__ = ("q", "coeffs")

    def __init__(self, coeffs, q: int):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) - 1 not in (1, 2, 3) or coeffs[-1] != 1:
            raise ValueError("need a monic integer polynomial of degree 1..3")
        if q < 2:
            raise ValueError("ambient q must be at least 2")
        _check_real_weil(coeffs, q)
        self.q = q
        self.coeffs = coeffs

    @property
    def g(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_type(cls, xs, q: int) -> "RealWeilPoly":
        """Build h(t) = prod (t - x_i) from an integer type [x_1, ..., x_g]."""
        for x in xs:
            if x * x > 4 * q:
                raise RootOutOfWeilRange(f"|{x}| > 2*sqrt({q})")
        coeffs = [1]
        for x in xs:
            coeffs = [0] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= x * coeffs[i + 1]
        return cls(coeffs, q)

    def integer_roots(self):
        """The type as an integer multiset when all roots are integers, else None."""
        roots = []
        coeffs = list(self.coeffs)
        for cand in range(-isqrt(4 * self.q), isqrt(4 * self.q) + 1):
            while sum(c * cand**i for i, c in enumerate(coeffs)) == 0 and len(coeffs) > 1:
                # synthetic division by (t - cand)
                out = []
                carry = 0
                for c in reversed(coeffs):
                    carry = c + carry * cand
                    out.append(carry)
                coeffs = list(reversed(out[:-1]))
                roots.append(cand)
        return sorted(roots, reverse=True) if len(roots) == self.g else None

    def twist(self) -> "RealWeilPoly":
        """Quadratic twist: (-1)**g * h(-t), negating every root."""
        g = self.g
        return RealWeilPoly(
            tuple(c if (g + k) % 2 == 0 else -c for k, c in enumerate(self.coeffs)), self.q
        )

    def frobenius_charpoly(self):
        """Degree-2g integer characteristic polynomial of Frobenius.

        h factors through pairs T**2 + x T + q = T*((T + q/T) + x), so the
        full polynomial is sum_j a_j T**(g-j) (T**2 + q)**j where the a_j
        are the coefficients of (-1)**g h(-u).
        """
        g, q = self.g, self.q
        a = [self.coeffs[k] * (-1) ** (g + k) for k in range(g + 1)]
        out = [0] * (2 * g + 1)
        for j in range(g + 1):
            # (T**2 + q)**j, then shift by T**(g - j)
            poly = [1]
            for _ in range(j):
                nxt = [0] * (len(poly) + 2)
                for i, c in enumerate(poly):
                    nxt[i] += q * c
                    nxt[i + 2] += c
                poly = nxt
            for i, c in enumerate(poly):
                out[g - j + i] += a[j] * c
        return tuple(out)

    def counts(self, rmax: int = 6):
        """Exact N_1..N_rmax via Newton's identities on the Frobenius polynomial."""
        pcp = self.frobenius_charpoly()
        deg = len(pcp) - 1
        # elementary symmetric functions of the eigenvalues
        elem = [0] * (rmax + 1)
        for i in range(1, rmax + 1):
            elem[i] = (-1) ** i * pcp[deg - i] if i <= deg else 0
        power = [0] * (rmax + 1)
        for r in range(1, rmax + 1):
            acc = (-1) ** (r - 1) * r * elem[r]
            for i in range(1, r):
                acc += (-1) ** (i - 1) * elem[i] * power[r - i]
            power[r] = acc
        return [self.q**r + 1 - power[r] for r in range(1, rmax + 1)]

    def __eq__(self, other):
        return (
            isinstance(other, RealWeilPoly)
            and (other.q, other.coeffs) == (self.q, self.coeffs)
        )

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __repr__(self):
        return f"RealWeilPoly(coeffs={list(self.coeffs)}, q={self.q})"


def type_to_poly(xs, q: int) -> RealWeilPoly:
    return RealWeilPoly.from_type(xs, q)


def counts_from_type(h: RealWeilPoly, rmax: int = 6):
    return h.counts(rmax)


@dataclass(frozen=True)
class Violation:
    kind: str  # "roots_not_real_weil" | "negative_count" | "count_not_monotone"
    detail: tuple

    def describe(self) -> str:
        if self.kind == "negative_count":
            r, n = self.detail
            return f"N_{r} = {n} < 0"
        if self.kind == "count_not_monotone":
            s, r, ns, nr = self.detail
            return f"N_{s} = {ns} > N_{r} = {nr} although F_q^{s} embeds in F_q^{r}"
        return str(self.detail[0])


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    violations: tuple
    counts: tuple | None


def admissible(h, q: int | None = None, rmax: int = 6) -> Admissibility:
    """Verdict on whether a zeta type could belong to an actual curve.

    Checks, in order: roots real and inside the Weil interval; N_r >= 0 for
    r <= rmax; N_s <= N_r whenever s | r (points over a subfield inject into
    the extension).  Violations are reported in scan order, so the first one
    is the cheapest witness of impossibility.
    """
    if not isinstance(h, RealWeilPoly):
        try:
            h = RealWeilPoly(h, q)
        except (RootOutOfWeilRange, ValueError) as exc:
            return Admissibility(False, (Violation("roots_not_real_weil", (str(exc),)),), None)
    counts = h.counts(rmax)
    violations = []
    for r in range(1, rmax + 1):
        n_r = counts[r - 1]
        if n_r < 0:
            violations.append(Violation("negative_count", (r, n_r)))
            continue
        for s in range(1, r):
            if r % s == 0 and counts[s - 1] > n_r:
                violations.append(Violation("count_not_monotone", (s, r, counts[s - 1], n_r)))
    return Admissibility(not violations, tuple(violations), tuple(counts))


def elliptic_trace_exists(q: int, t: int) -> bool:
    """Whether some elliptic curve over F_q has Frobenius trace t
    (Waterhouse's classification of isogeny classes)."""
    pp = factor_prime_power(q)
    p, e = pp.p, pp.e
    if t * t > 4 * q:
        return False
    if t % p != 0:
        return True
    if e % 2 == 0:
        root = isqrt(q)
        if t in (2 * root, -2 * root):
            return True
        if t in (root, -root) and p % 3 != 1:
            return True
        if t == 0 and p % 4 != 1:
            return True
        return False
    if t == 0:
        return True
    if p in (2, 3) and abs(t) == p ** ((e + 1) // 2):
        return True
    return False
