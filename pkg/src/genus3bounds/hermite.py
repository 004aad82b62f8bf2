"""Positive-definite hermitian forms over imaginary quadratic orders R_d.

Rank-2 forms are Gram matrices [[lam, conj(alpha)], [alpha, mu]] with
integer diagonal 0 < lam <= mu and alpha in R_d; the pairing is
conjugate-linear in its first slot, so the basis change
e2 -> e2 - conj(r) e1 replaces alpha by alpha - lam*r.  The value of an
integer vector (a, b) is

    lam*N(a) + mu*N(b) + Tr(a * conj(b) * alpha)
      = lam*|a + (conj(alpha)/lam) b|**2 + (disc/lam)*N(b),

which is the inequality behind every enumeration bound in this module:
vectors of bounded value confine N(b), and for fixed b the optimal a is a
closest lattice point.  Reduction translates alpha/lam into the covering
cell of R_d, orders the diagonal, and certifies that lam is the actual
minimum of the form by bounded vector enumeration.

Rank-3 forms are searched, not classified: the unimodular search is sound
(every returned form is verified positive definite, determinant 1, and
represents-1-free) but an empty result is not a nonexistence proof beyond
the searched box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import isqrt
from .qorder import (
    OrderElement,
    class_number,
    closest_element,
    covering_radius_sq,
    elements_in_disk,
    norm_representations,
    norm_uv,
    units,
)

__all__ = [
    "NotPositiveDefinite",
    "UnsupportedCase",
    "IncompleteForDiscriminant",
    "HermitianForm2",
    "HermitianForm3",
    "DecompositionVerdict",
    "Rank2Class",
    "disc2",
    "reduce2",
    "canonical_key",
    "minimum2",
    "vectors_with_value2",
    "represents_one",
    "is_indecomposable",
    "enumerate_reduced2",
    "search_unimodular_indecomposable3",
    "hoffmann_exists",
    "form_to_dict",
    "form_from_dict",
]


class NotPositiveDefinite(ValueError):
    pass


class UnsupportedCase(ValueError):
    pass


class IncompleteForDiscriminant(ValueError):
    pass


# Hoffmann's exceptional discriminants: the only d for which every
# unimodular hermitian R_d-module of the given rank is decomposable.
_HOFFMANN_EXCEPTIONS = {2: frozenset({-3, -4, -7}), 3: frozenset({-3, -4, -8, -11})}


def hoffmann_exists(rank: int, d: int) -> bool:
    """Existence of an indecomposable positive definite unimodular hermitian
    R_d-module of the given rank (data table, rank 2 and 3 only)."""
    if rank not in (2, 3):
        raise ValueError("rank must be 2 or 3")
    if d >= 0 or d % 4 not in (0, 1):
        raise ValueError(f"{d} is not a negative quadratic discriminant")
    return d not in _HOFFMANN_EXCEPTIONS[rank]


class HermitianForm2:
    """Rank-2 form [[lam, conj(alpha)], [alpha, mu]] over R_d."""

    __slots__ = ("d", "lam", "mu", "alpha")

    def __init__(self, d: int, lam: int, mu: int, alpha: OrderElement):
        if alpha.d != d:
            raise ValueError("alpha lives in a different order")
        self.d = d
        self.lam = int(lam)
        self.mu = int(mu)
        self.alpha = alpha

    def disc(self) -> int:
        return self.lam * self.mu - self.alpha.norm()

    def is_positive_definite(self) -> bool:
        return self.lam > 0 and self.disc() > 0

    def value(self, a: OrderElement, b: OrderElement) -> int:
        t = (a * b.conj() * self.alpha).trace()
        return self.lam * a.norm() + self.mu * b.norm() + t

    def pair(self, x, y) -> OrderElement:
        """H(x, y) for vectors x = (a1, b1), y = (a2, b2); conjugate-linear in x."""
        a1, b1 = x
        a2, b2 = y
        lam = OrderElement(self.d, self.lam, 0)
        mu = OrderElement(self.d, self.mu, 0)
        return (
            a1.conj() * a2 * lam
            + a1.conj() * b2 * self.alpha.conj()
            + b1.conj() * a2 * self.alpha
            + b1.conj() * b2 * mu
        )

    def key(self):
        return (self.d, self.lam, self.mu, self.alpha.u, self.alpha.v)

    def __eq__(self, other):
        return isinstance(other, HermitianForm2) and other.key() == self.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"HermitianForm2(d={self.d}, lam={self.lam}, mu={self.mu}, alpha=({self.alpha.u},{self.alpha.v}))"


class HermitianForm3:
    """Rank-3 form with integer diagonal and lower off-diagonal entries
    a21 = H(e2, e1), a31 = H(e3, e1), a32 = H(e3, e2)."""

    __slots__ = ("d", "diag", "a21", "a31", "a32")

    def __init__(self, d: int, diag, a21: OrderElement, a31: OrderElement, a32: OrderElement):
        if any(x.d != d for x in (a21, a31, a32)):
            raise ValueError("off-diagonal entries live in a different order")
        self.d = d
        self.diag = tuple(int(x) for x in diag)
        self.a21, self.a31, self.a32 = a21, a31, a32

    def det(self) -> int:
        l1, l2, l3 = self.diag
        t = (self.a21 * self.a32 * self.a31.conj()).trace()
        return (
            l1 * l2 * l3
            - l1 * self.a32.norm()
            - l2 * self.a31.norm()
            - l3 * self.a21.norm()
            + t
        )

    def is_positive_definite(self) -> bool:
        l1, l2, _ = self.diag
        return l1 > 0 and l1 * l2 - self.a21.norm() > 0 and self.det() > 0

    def value(self, x1: OrderElement, x2: OrderElement, x3: OrderElement) -> int:
        l1, l2, l3 = self.diag
        v = l1 * x1.norm() + l2 * x2.norm() + l3 * x3.norm()
        v += (x1 * x2.conj() * self.a21).trace()
        v += (x1 * x3.conj() * self.a31).trace()
        v += (x2 * x3.conj() * self.a32).trace()
        return v

    def key(self):
        return (self.d, self.diag, (self.a21.u, self.a21.v), (self.a31.u, self.a31.v), (self.a32.u, self.a32.v))

    def __eq__(self, other):
        return isinstance(other, HermitianForm3) and other.key() == self.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return (
            f"HermitianForm3(d={self.d}, diag={self.diag}, "
            f"a21=({self.a21.u},{self.a21.v}), a31=({self.a31.u},{self.a31.v}), a32=({self.a32.u},{self.a32.v}))"
        )


def disc2(f: HermitianForm2) -> int:
    return f.disc()


# -- rank-2 vector enumeration (all integer arithmetic) -----------------------
#
# Scaling by lam turns every distance comparison into an integer one:
#   value(a, b) = (N(lam*a + conj(alpha)*b) + disc * N(b)) / lam,
# so vector searches reduce to minimizing/bounding N(w + lam*a) for the
# integer element w = conj(alpha) * b.


def _closest_multiple(d, lam, w):
    """(min N(w - lam*r), [all minimizing r as (u, v)]) by window search:
    any minimizer satisfies N(w - lam*r) <= covering_radius * lam**2, which
    confines r to a 4 x 2 window around w / lam."""
    wu, wv = w.u, w.v
    rv0 = wv // lam
    best = None
    cands = []
    for rv in range(rv0 - 1, rv0 + 3):
        t = wv - lam * rv
        ru0 = wu // lam if d % 4 == 0 else (2 * wu + t) // (2 * lam)
        for ru in (ru0, ru0 + 1):
            n = norm_uv(d, wu - lam * ru, t)
            if best is None or n < best:
                best, cands = n, [(ru, rv)]
            elif n == best:
                cands.append((ru, rv))
    return best, cands


def _points_norm_le(d, bound):
    """All (u, v) integer pairs with norm <= bound."""
    if bound < 0:
        return []
    out = []
    vmax = isqrt(4 * bound // (-d))
    for v in range(-vmax, vmax + 1):
        if d % 4 == 0:
            rest = bound - (-d // 4) * v * v
            if rest < 0:
                continue
            s = isqrt(rest)
            out.extend((u, v) for u in range(-s, s + 1))
        else:
            # 4*norm = (2u + v)^2 + |d| v^2, so |2u + v| <= s
            rest = 4 * bound + d * v * v
            if rest < 0:
                continue
            s = isqrt(rest)
            out.extend(
                (u, v)
                for u in range((-s - v) // 2 - 1, (s - v) // 2 + 2)
                if norm_uv(d, u, v) <= bound
            )
    return out


def _shifted_points_le(d, lam, w, bound):
    """All a with N(lam*a + w) <= bound, integer arithmetic throughout."""
    if bound < 0:
        return []
    wu, wv = w.u, w.v
    out = []
    # v-component: (|d|/4) * (lam*av + wv)^2 <= bound
    smax = isqrt(4 * bound // (-d))
    lo = -((smax + wv) // lam) - 2
    hi = (smax - wv) // lam + 2
    for av in range(lo, hi + 1):
        t = lam * av + wv
        if -d * t * t > 4 * bound:
            continue
        if d % 4 == 0:
            rest = bound - (-d // 4) * t * t
            s = isqrt(rest)
            ulo = -((s + wu) // lam) - 1
            uhi = (s - wu) // lam + 1
        else:
            rest = 4 * bound + d * t * t
            s = isqrt(rest)
            # |2(lam*au + wu) + t| <= s
            ulo = -((s + 2 * wu + t) // (2 * lam)) - 1
            uhi = (s - 2 * wu - t) // (2 * lam) + 1
        for au in range(ulo, uhi + 1):
            if norm_uv(d, lam * au + wu, t) <= bound:
                out.append(OrderElement(d, au, av))
    return out


def vectors_with_value2(f: HermitianForm2, target: int):
    """All vectors (a, b) with value exactly target (complete enumeration).

    From value >= (disc/lam) N(b) the b-norm is bounded; for each b the
    a-coordinate satisfies N(lam*a + conj(alpha)*b) <= lam*target - disc*N(b).
    """
    if not f.is_positive_definite():
        raise NotPositiveDefinite(repr(f))
    if target < 1:
        return []
    d, lam, disc = f.d, f.lam, f.disc()
    out = []
    for bu, bv in _points_norm_le(d, target * lam // disc):
        b = OrderElement(d, bu, bv)
        w = f.alpha.conj() * b
        for a in _shifted_points_le(d, lam, w, lam * target - disc * b.norm()):
            if (a or b) and f.value(a, b) == target:
                out.append((a, b))
    return out


def minimum2(f: HermitianForm2) -> int:
    """Minimum nonzero value of the form, by closest-vector search per b:
    value(a, b) = (N(lam*a + conj(alpha)*b) + disc*N(b)) / lam, and for fixed
    b the optimal a is a closest multiple."""
    if not f.is_positive_definite():
        raise NotPositiveDefinite(repr(f))
    d, lam, disc = f.d, f.lam, f.disc()
    best = lam  # attained by e1
    for bu, bv in _points_norm_le(d, lam * lam // disc):
        if not (bu or bv):
            continue
        b = OrderElement(d, bu, bv)
        w = f.alpha.conj() * b
        nmin, _ = _closest_multiple(d, lam, OrderElement(d, -w.u, -w.v))
        num = nmin + disc * b.norm()
        assert num % lam == 0
        best = min(best, num // lam)
    return best


def _shorter_vector(f: HermitianForm2):
    """A vector of value < lam if one exists (f assumed cell-translated)."""
    d, lam, disc = f.d, f.lam, f.disc()
    for bu, bv in _points_norm_le(d, (lam - 1) * lam // disc):
        if not (bu or bv):
            continue
        b = OrderElement(d, bu, bv)
        w = f.alpha.conj() * b
        _, cands = _closest_multiple(d, lam, OrderElement(d, -w.u, -w.v))
        a = OrderElement(d, *min(cands))
        if f.value(a, b) < lam:
            return a, b
    return None


# -- reduction ---------------------------------------------------------------


def _mat_mul(d, m1, m2):
    z = OrderElement(d, 0, 0)
    out = [[z, z], [z, z]]
    for i in range(2):
        for j in range(2):
            out[i][j] = m1[i][0] * m2[0][j] + m1[i][1] * m2[1][j]
    return (tuple(out[0]), tuple(out[1]))


def _identity(d):
    one, zero = OrderElement(d, 1, 0), OrderElement(d, 0, 0)
    return ((one, zero), (zero, one))


def transform2(f: HermitianForm2, u) -> HermitianForm2:
    """The form in the basis whose j-th vector is column j of u (entries in R_d)."""
    cols = [(u[0][0], u[1][0]), (u[0][1], u[1][1])]
    lam = f.pair(cols[0], cols[0])
    mu = f.pair(cols[1], cols[1])
    alpha = f.pair(cols[1], cols[0])
    assert lam.v == 0 and mu.v == 0, "diagonal must stay rational"
    return HermitianForm2(f.d, lam.u, mu.u, alpha)


def _gcd_right(d, a, b):
    """Extended gcd in a norm-Euclidean R_d: returns (g, s, t), s*a + t*b = g."""
    one, zero = OrderElement(d, 1, 0), OrderElement(d, 0, 0)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    guard = 0
    while r1:
        w = r0 * r1.conj()
        q = OrderElement(d, *min(_closest_multiple(d, r1.norm(), w)[1]))
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
        guard += 1
        if guard > 10_000:
            raise UnsupportedCase(f"Euclidean descent does not terminate for d={d}")
    return r0, s0, t0


def _cell_translates(d, lam, alpha):
    """All translates alpha - lam*r of minimal norm (the closed-cell representatives)."""
    _, cands = _closest_multiple(d, lam, alpha)
    return [alpha - lam * OrderElement(d, ru, rv) for ru, rv in cands]


def _orbit_canonical_alpha(d, lam, alpha, with_conj: bool):
    """Lexicographically smallest closed-cell representative over the unit
    orbit of alpha (optionally together with its conjugate)."""
    gammas = [alpha, alpha.conj()] if with_conj else [alpha]
    best = None
    for gamma in gammas:
        for u in units(d):
            for cand in _cell_translates(d, lam, gamma * u):
                k = (cand.u, cand.v)
                if best is None or k < best:
                    best = k
    return OrderElement(d, *best)


def reduce2(f: HermitianForm2):
    """Reduce to the canonical equivalent form; returns (reduced, u).

    The change of basis u (columns = new basis in old coordinates) satisfies
    transform2(f, u) == reduced exactly.  The output has lam <= mu, alpha a
    lexicographically-normalized closed-cell representative with
    N(alpha) <= covering_radius_sq(d) * lam**2, and lam equal to the true
    minimum of the form (certified by bounded vector enumeration; the
    restart step needs division with remainder, so certification of
    minimality requires a norm-Euclidean order, covering_radius_sq(d) < 1).

    Idempotent: reducing the output returns it unchanged.
    """
    if not f.is_positive_definite():
        raise NotPositiveDefinite(repr(f))
    d = f.d
    euclidean = covering_radius_sq(d) < 1
    u = _identity(d)
    cur = f
    one, zero = OrderElement(d, 1, 0), OrderElement(d, 0, 0)
    while True:
        if cur.mu < cur.lam:
            swap = ((zero, one), (one, zero))
            u = _mat_mul(d, u, swap)
            cur = transform2(cur, swap)
            continue
        r = OrderElement(d, *min(_closest_multiple(d, cur.lam, cur.alpha)[1]))
        if r:
            tr = ((one, -r.conj()), (zero, one))
            u = _mat_mul(d, u, tr)
            cur = transform2(cur, tr)
            if cur.mu < cur.lam:
                continue
        if not euclidean:
            break
        short = _shorter_vector(cur)
        if short is None:
            break
        a, b = short
        g, s, t = _gcd_right(d, a, b)
        if g.norm() != 1:
            a, b = _divide(a, g), _divide(b, g)
            g, s, t = _gcd_right(d, a, b)
        assert g.norm() == 1
        ginv = g.conj()
        s2, t2 = s * ginv, t * ginv
        v = ((a, -t2), (b, s2))
        u = _mat_mul(d, u, v)
        cur = transform2(cur, v)
    # normalize alpha over the unit orbit (conjugation is not a basis change,
    # so it is reserved for canonical_key)
    best = _orbit_canonical_alpha(d, cur.lam, cur.alpha, with_conj=False)
    if best != cur.alpha:
        for unit in units(d):
            for cand in _cell_translates(d, cur.lam, cur.alpha * unit):
                if cand == best:
                    w = cand - cur.alpha * unit
                    # cand = alpha*unit - lam*r  ->  r = -(w)/lam
                    r = _divide_int(w, -cur.lam)
                    step = _mat_mul(d, ((unit, zero), (zero, one)), ((one, -r.conj()), (zero, one)))
                    u = _mat_mul(d, u, step)
                    cur = transform2(cur, step)
                    break
            else:
                continue
            break
    return cur, u


def _divide(a: OrderElement, g: OrderElement) -> OrderElement:
    """Exact division a / g in R_d (raises if not divisible)."""
    n = g.norm()
    w = a * g.conj()
    if w.u % n or w.v % n:
        raise ValueError(f"{a} not divisible by {g}")
    return OrderElement(a.d, w.u // n, w.v // n)


def _divide_int(a: OrderElement, n: int) -> OrderElement:
    if a.u % n or a.v % n:
        raise ValueError(f"{a} not divisible by {n}")
    return OrderElement(a.d, a.u // n, a.v // n)


def canonical_key(f: HermitianForm2):
    """Equivalence-class key: the reduced (lam, mu, alpha) with alpha further
    normalized over conjugation.  Conjugate forms share a key by design (the
    tie-break prescribes it); they represent the same values and have the
    same decomposability, which is all the pipeline consumes."""
    red, _ = reduce2(f)
    alpha = _orbit_canonical_alpha(f.d, red.lam, red.alpha, with_conj=True)
    return (f.d, red.lam, red.mu, alpha.u, alpha.v)


# -- decomposability ---------------------------------------------------------


@dataclass(frozen=True)
class DecompositionVerdict:
    indecomposable: bool
    certified: bool
    witness: tuple | None  # norm-1 vector, or an orthogonal splitting pair


def represents_one(f):
    """Witness vector of value 1, or None.  Rank 2 uses the closest-vector
    enumeration; rank 3 goes through the generic short-vector engine."""
    if isinstance(f, HermitianForm2):
        vecs = vectors_with_value2(f, 1)
        return vecs[0] if vecs else None
    if isinstance(f, HermitianForm3):
        if not f.is_positive_definite():
            raise NotPositiveDefinite(repr(f))
        for vec, val in _short_vectors(_gram6(f), 1):
            if val == 1:
                d = f.d
                return (
                    OrderElement(d, vec[0], vec[1]),
                    OrderElement(d, vec[2], vec[3]),
                    OrderElement(d, vec[4], vec[5]),
                )
        return None
    raise TypeError("expected a rank 2 or 3 hermitian form")


def is_indecomposable(f) -> DecompositionVerdict:
    """Decide orthogonal indecomposability.

    Unimodular forms (any rank here) and rank-2 forms of discriminant 2 are
    indecomposable exactly when they do not represent 1; other rank-2 forms
    get a direct search for an orthogonal pair of vectors spanning the
    module.  Results are certified only over class number 1, where every
    rank-1 orthogonal summand is free and therefore visible to the search.
    """
    certified = class_number(f.d) == 1
    if isinstance(f, HermitianForm3):
        if f.det() != 1:
            raise UnsupportedCase("rank-3 decomposability implemented only for determinant 1")
        w = represents_one(f)
        return DecompositionVerdict(w is None, certified, w)
    if not isinstance(f, HermitianForm2):
        raise TypeError("expected a rank 2 or 3 hermitian form")
    disc = f.disc()
    if disc in (1, 2):
        w = represents_one(f)
        return DecompositionVerdict(w is None, certified, w)
    v1 = 1
    while v1 * v1 <= disc:
        if disc % v1 == 0:
            for w1 in vectors_with_value2(f, v1):
                for w2 in vectors_with_value2(f, disc // v1):
                    h = f.pair(w1, w2)
                    if h:
                        continue
                    det = w1[0] * w2[1] - w1[1] * w2[0]
                    if det.norm() == 1:
                        return DecompositionVerdict(False, certified, (w1, w2))
        v1 += 1
    return DecompositionVerdict(True, certified, None)


# -- complete rank-2 enumeration ---------------------------------------------


@dataclass(frozen=True)
class Rank2Class:
    form: HermitianForm2
    indecomposable: bool


def enumerate_reduced2(d: int, disc: int) -> list[Rank2Class]:
    """All equivalence classes of positive definite rank-2 forms over R_d of
    the given discriminant, one reduced representative each.

    Complete exactly when c = covering_radius_sq(d) < 1: every class has a
    reduced representative with lam**2 <= lam*mu = disc + N(alpha)
    <= disc + c*lam**2, so lam**2 <= disc/(1-c), mu <= (disc + c*lam**2)/lam,
    and alpha a closed-cell element of norm lam*mu - disc.
    """
    if disc < 1:
        raise ValueError("discriminant must be >= 1")
    c = covering_radius_sq(d)
    if c >= 1:
        raise IncompleteForDiscriminant(
            f"covering radius squared {c} >= 1: the lam bound does not close for d={d}"
        )
    seen = {}
    lam = 1
    while lam * lam * (1 - c) <= disc:
        mu_hi = int((disc + c * lam * lam) / lam)
        for mu in range(lam, mu_hi + 1):
            n = lam * mu - disc
            if n < 0:
                continue
            for alpha in norm_representations(d, n):
                if _closest_multiple(d, lam, alpha)[0] != n:
                    continue  # not a closed-cell representative
                form = HermitianForm2(d, lam, mu, alpha)
                if not form.is_positive_definite():
                    continue
                key = canonical_key(form)
                if key not in seen:
                    seen[key] = HermitianForm2(d, key[1], key[2], OrderElement(d, key[3], key[4]))
        lam += 1
    classes = [
        Rank2Class(form, is_indecomposable(form).indecomposable)
        for form in sorted(seen.values(), key=lambda f: f.key())
    ]
    return classes


# -- generic short-vector engine (used by rank 3) -----------------------------


def _gram6(f: HermitianForm3):
    """Rational 6x6 Gram matrix of the underlying Z-quadratic form in the
    coordinates (u1, v1, u2, v2, u3, v3)."""
    d = f.d

    def val(coords):
        x = [OrderElement(d, coords[0], coords[1]), OrderElement(d, coords[2], coords[3]), OrderElement(d, coords[4], coords[5])]
        return f.value(*x)

    basis = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    diag = [val(basis[i]) for i in range(6)]
    g = [[Fraction(0)] * 6 for _ in range(6)]
    for i in range(6):
        g[i][i] = Fraction(diag[i])
        for j in range(i + 1, 6):
            both = [basis[i][k] + basis[j][k] for k in range(6)]
            g[i][j] = g[j][i] = Fraction(val(both) - diag[i] - diag[j], 2)
    return g


def _ldl(g):
    n = len(g)
    low = [[Fraction(0)] * n for _ in range(n)]
    dd = [Fraction(0)] * n
    for j in range(n):
        s = g[j][j] - sum(dd[k] * low[j][k] * low[j][k] for k in range(j))
        if s <= 0:
            raise NotPositiveDefinite("Gram matrix is not positive definite")
        dd[j] = s
        low[j][j] = Fraction(1)
        for i in range(j + 1, n):
            low[i][j] = (g[i][j] - sum(dd[k] * low[i][k] * low[j][k] for k in range(j))) / dd[j]
    return low, dd


def _short_vectors(g, bound):
    """Yield (x, value) for nonzero integer x with x^T g x <= bound
    (Fincke-Pohst over exact rationals; both signs of each vector appear)."""
    from .arith import ceil_minus_sqrt, floor_plus_sqrt

    low, dd = _ldl(g)
    n = len(g)
    x = [0] * n

    def rec(j, rem):
        if j < 0:
            if any(x):
                val = sum(g[i][k] * x[i] * x[k] for i in range(n) for k in range(n))
                yield tuple(x), val
            return
        c = sum(low[i][j] * x[i] for i in range(j + 1, n))
        f = rem / dd[j]
        for t in range(ceil_minus_sqrt(-c, f), floor_plus_sqrt(-c, f) + 1):
            x[j] = t
            q = dd[j] * (t + c) ** 2
            yield from rec(j - 1, rem - q)
            x[j] = 0

    yield from rec(n - 1, Fraction(bound))


# -- rank-3 unimodular search --------------------------------------------------


def search_unimodular_indecomposable3(d: int, entry_bound: int, limit: int | None = None):
    """Search free rank-3 hermitian R_d-modules with determinant 1, positive
    definite and not representing 1, with sorted diagonal in [2, entry_bound]
    and off-diagonal norms <= entry_bound.

    Sound, not complete: every returned form is verified (the represents-1
    criterion certifies indecomposability when class_number(d) = 1), but an
    empty result only rules out the searched box, and non-free modules (class
    number > 1) are invisible to a matrix search.  Restricting to sorted
    diagonals loses nothing: permuting the basis keeps every entry bound.
    """
    if entry_bound < 1:
        raise ValueError("entry_bound must be >= 1")
    elems = elements_in_disk(d, Fraction(0), Fraction(0), Fraction(entry_bound))
    found = []
    for l1 in range(2, entry_bound + 1):
        for l2 in range(l1, entry_bound + 1):
            for a21 in elems:
                m2 = l1 * l2 - a21.norm()
                if m2 <= 0:
                    continue
                for a31 in elems:
                    for a32 in elems:
                        t = (a21 * a32 * a31.conj()).trace()
                        num = 1 + l1 * a32.norm() + l2 * a31.norm() - t
                        if num <= 0 or num % m2:
                            continue
                        l3 = num // m2
                        if l3 < l2 or l3 > entry_bound:
                            continue
                        form = HermitianForm3(d, (l1, l2, l3), a21, a31, a32)
                        assert form.det() == 1
                        if represents_one(form) is None:
                            found.append(form)
                            if limit is not None and len(found) >= limit:
                                return found
    found.sort(key=lambda f: f.key())
    return found


# -- serialization -------------------------------------------------------------


def form_to_dict(f) -> dict:
    if isinstance(f, HermitianForm2):
        return {
            "d": f.d,
            "rank": 2,
            "diagonal": [f.lam, f.mu],
            "off_diagonal": [[f.alpha.u, f.alpha.v]],
        }
    if isinstance(f, HermitianForm3):
        return {
            "d": f.d,
            "rank": 3,
            "diagonal": list(f.diag),
            "off_diagonal": [[a.u, a.v] for a in (f.a21, f.a31, f.a32)],
        }
    raise TypeError("expected a rank 2 or 3 hermitian form")


def form_from_dict(rec: dict):
    d = rec["d"]
    rank = rec["rank"]
    diag = rec["diagonal"]
    off = [OrderElement(d, u, v) for u, v in rec["off_diagonal"]]
    if rank == 2:
        if len(diag) != 2 or len(off) != 1:
            raise ValueError("rank-2 record needs 2 diagonal entries and 1 off-diagonal")
        return HermitianForm2(d, diag[0], diag[1], off[0])
    if rank == 3:
        if len(diag) != 3 or len(off) != 3:
            raise ValueError("rank-3 record needs 3 diagonal entries and 3 off-diagonal (a21, a31, a32)")
        return HermitianForm3(d, diag, off[0], off[1], off[2])
    raise ValueError("rank must be 2 or 3")
