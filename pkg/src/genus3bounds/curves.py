"""Brute-force point counting for the explicit genus-3 models in scope.

Four model kinds, each carrying its genus by construction and validating
degenerate input instead of inferring geometry from equations:

  PlaneQuartic        F(x,y,z) = 0, homogeneous quartic in P^2
  ArtinSchreier       y^p - y = f(x) in characteristic p, gcd(deg f, p) = 1
  Weierstrass         long Weierstrass cubic (all characteristics)
  BiellipticProduct   y1^2 = f(x), y2^2 = g(x), odd characteristic

Counts over F_{q^r} embed the coefficients into the extension and enumerate;
the caps keep every loop at or below 2**20 iterations.  The bielliptic count
uses the three-quotient identity

    N(C) = N(E_f) + N(E_g) + N(E_fg) - 2(q^r + 1)

(E_fg is y^2 = squarefree part of f*g) as the primary method; a direct count
of affine triples with explicit corrections above common roots of f, g and
above x = infinity is provided for cross-validation.

Model files are JSON records {"model": kind, "field": {p, e, modulus?},
...coefficients}; see `model_from_dict` for the per-kind fields.  Coefficient
entries are integers (prime subfield) or coefficient vectors in the field
basis.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .arith import FieldElement, FieldTooLarge, FiniteField, field_make
from .weil import RealWeilPoly

__all__ = [
    "ModelError",
    "SingularCurve",
    "NonIntegralSolution",
    "MONOMIALS4",
    "PlaneQuartic",
    "ArtinSchreier",
    "Weierstrass",
    "BiellipticProduct",
    "TwoTorsionAction",
    "count_plane_quartic",
    "count_artin_schreier",
    "count_weierstrass",
    "count_model",
    "weierstrass_trace",
    "count_bielliptic_product",
    "count_bielliptic_direct",
    "plane_quartic_is_smooth",
    "zeta_from_counts",
    "two_torsion_action",
    "model_from_dict",
    "model_to_dict",
    "defect2_curve_f2",
    "defect3_curve_f3",
    "defect3_curve_f4",
    "klein_curve",
    "defect2_product_f27",
]

MAX_POINT_ENUM = 1 << 20

# homogeneous quartic monomials x^i y^j z^k, i+j+k = 4, lex-descending
MONOMIALS4 = tuple(
    (i, j, 4 - i - j) for i in range(4, -1, -1) for j in range(4 - i, -1, -1)
)


class ModelError(ValueError):
    pass


class SingularCurve(ValueError):
    pass


class NonIntegralSolution(ValueError):
    pass


# -- field plumbing -----------------------------------------------------------


@lru_cache(maxsize=None)
def _extension(field: FiniteField, r: int) -> FiniteField:
    if r == 1:
        return field
    return field_make(field.p, field.e * r)


@lru_cache(maxsize=None)
def _embedding_root(sub: FiniteField, sup: FiniteField):
    """Image of sub's generator in sup: the first root of sub's modulus."""
    if sup.e % sub.e:
        raise ValueError(f"F_{sub.q} does not embed in F_{sup.q}")
    for cand in sup.enumerate_all():
        acc = sup.zero
        for c in reversed(sub.modulus):
            acc = acc * cand + sup.element(c)
        if not acc:
            return cand
    raise AssertionError("modulus has no root in the extension")


def _embed(sub: FiniteField, sup: FiniteField):
    if sub is sup:
        return lambda el: el

    def mapping(el: FieldElement) -> FieldElement:
        if all(c == 0 for c in el.coeffs[1:]):
            return sup.element(el.coeffs[0])
        root = _embedding_root(sub, sup)
        acc = sup.zero
        for c in reversed(el.coeffs):
            acc = acc * root + sup.element(c)
        return acc

    return mapping


@lru_cache(maxsize=None)
def _square_set(field: FiniteField):
    return frozenset(x * x for x in field.enumerate_all())


def _chi(field: FiniteField, x: FieldElement) -> int:
    """Quadratic character (odd characteristic)."""
    if not x:
        return 0
    return 1 if x in _square_set(field) else -1


# -- polynomial helpers over field elements (dense, low -> high) --------------


def _pmake(field, coeffs):
    out = [field.element(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def _pev(poly, x):
    acc = x.field.zero
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _pmul(field, a, b):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return out


def _pderiv(field, a):
    out = []
    for k in range(1, len(a)):
        c = a[k]
        acc = field.zero
        for _ in range(k % field.p):
            acc = acc + c
        out.append(acc)
    while out and not out[-1]:
        out.pop()
    return out


def _pmod(field, a, b):
    a = list(a)
    inv = b[-1].inv()
    while len(a) >= len(b):
        if not a[-1]:
            a.pop()
            continue
        f = a[-1] * inv
        off = len(a) - len(b)
        for i in range(len(b)):
            a[off + i] = a[off + i] - f * b[i]
        a.pop()
    while a and not a[-1]:
        a.pop()
    return a


def _pgcd(field, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(field, a, b)
    if a:
        inv = a[-1].inv()
        a = [c * inv for c in a]
    return a


def _pdiv(field, a, b):
    """Exact quotient a / b (remainder must vanish)."""
    a = list(a)
    inv = b[-1].inv()
    quot = [field.zero] * (len(a) - len(b) + 1)
    while len(a) >= len(b):
        if not a[-1]:
            a.pop()
            continue
        f = a[-1] * inv
        quot[len(a) - len(b)] = f
        off = len(a) - len(b)
        for i in range(len(b)):
            a[off + i] = a[off + i] - f * b[i]
        a.pop()
    assert not any(a), "division was not exact"
    while quot and not quot[-1]:
        quot.pop()
    return quot


def _remove_square_factors(field, a):
    """a with its largest square divisor removed (valid for root
    multiplicities <= 2, which products of two squarefree polynomials obey)."""
    g = _pgcd(field, a, _pderiv(field, a))
    if len(g) <= 1:
        return list(a)
    return _pdiv(field, a, _pmul(field, g, g))


def _is_squarefree(field, a):
    return len(_pgcd(field, a, _pderiv(field, a))) <= 1


# -- models -------------------------------------------------------------------


class PlaneQuartic:
    """Homogeneous quartic plane curve; coefficients in MONOMIALS4 order,
    or a {(i, j, k): coeff} mapping."""

    def __init__(self, field: FiniteField, coefficients):
        self.field = field
        if isinstance(coefficients, dict):
            coeffs = [field.element(coefficients.get(m, 0)) for m in MONOMIALS4]
        else:
            if len(coefficients) != len(MONOMIALS4):
                raise ModelError(f"need {len(MONOMIALS4)} quartic coefficients")
            coeffs = [field.element(c) for c in coefficients]
        if not any(coeffs):
            raise ModelError("the zero form is not a curve")
        self.coeffs = tuple(coeffs)

    def _value(self, ext, emb, x, y, z):
        xp = [ext.one, x, x * x, x * x * x, x * x * x * x]
        yp = [ext.one, y, y * y, y * y * y, y * y * y * y]
        zp = [ext.one, z, z * z, z * z * z, z * z * z * z]
        acc = ext.zero
        for c, (i, j, k) in zip(self.coeffs, MONOMIALS4):
            if c:
                acc = acc + emb(c) * xp[i] * yp[j] * zp[k]
        return acc


class ArtinSchreier:
    """y^p - y = f(x) with p the field characteristic; validated genus 3."""

    def __init__(self, field: FiniteField, f):
        self.field = field
        self.f = _pmake(field, f)
        deg = len(self.f) - 1
        if deg < 2:
            raise ModelError("right-hand side must have degree >= 2")
        if deg % field.p == 0:
            raise ModelError("degree of f must be prime to the characteristic")
        genus = (field.p - 1) * (deg - 1) // 2
        if genus != 3:
            raise ModelError(f"model has genus {genus}, not 3")


class Weierstrass:
    """Long Weierstrass model y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    def __init__(self, field: FiniteField, a1, a2, a3, a4, a6):
        self.field = field
        self.a = tuple(field.element(c) for c in (a1, a2, a3, a4, a6))
        if not self.discriminant():
            raise SingularCurve("vanishing discriminant")

    @classmethod
    def short(cls, field: FiniteField, a, b):
        return cls(field, 0, 0, 0, a, b)

    def discriminant(self) -> FieldElement:
        a1, a2, a3, a4, a6 = self.a
        f = self.field

        def n(k, x):  # integer multiple inside the field
            acc = f.zero
            for _ in range(k % f.p):
                acc = acc + x
            return acc

        b2 = a1 * a1 + n(4, a2)
        b4 = n(2, a4) + a1 * a3
        b6 = a3 * a3 + n(4, a6)
        b8 = a1 * a1 * a6 + n(4, a2 * a6) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -(b2 * b2 * b8) - n(8, b4 * b4 * b4) - n(27, b6 * b6) + n(9, b2 * b4 * b6)


class BiellipticProduct:
    """Fiber product y1^2 = f(x), y2^2 = g(x) over a field of odd
    characteristic; f, g squarefree of degree 3 or 4 and the three elliptic
    quotients E_f, E_g, E_fg must all have genus 1 (total genus 3)."""

    def __init__(self, field: FiniteField, f, g):
        if field.p == 2:
            raise ModelError("bielliptic products need odd characteristic")
        self.field = field
        self.f = _pmake(field, f)
        self.g = _pmake(field, g)
        for name, poly in (("f", self.f), ("g", self.g)):
            if len(poly) - 1 not in (3, 4):
                raise ModelError(f"{name} must be a cubic or quartic")
            if not _is_squarefree(field, poly):
                raise ModelError(f"{name} must be squarefree")
        s = _remove_square_factors(field, _pmul(field, self.f, self.g))
        if len(s) - 1 not in (3, 4):
            raise ModelError(
                f"f*g has squarefree part of degree {len(s) - 1}; the quotient y^2 = f*g "
                "must have genus 1 for a genus-3 product"
            )
        self.fg_squarefree = s


# -- counting -----------------------------------------------------------------


def _guard(points: int):
    if points > MAX_POINT_ENUM:
        raise FieldTooLarge(f"{points} points exceed the enumeration cap {MAX_POINT_ENUM}")


def count_plane_quartic(curve: PlaneQuartic, r: int = 1) -> int:
    """Projective points over F_{q^r}, one representative per point
    (first nonzero coordinate normalized to 1)."""
    ext = _extension(curve.field, r)
    _guard(ext.q * ext.q + ext.q + 1)
    emb = _embed(curve.field, ext)
    elems = list(ext.enumerate_all())
    count = 0
    one, zero = ext.one, ext.zero
    for y in elems:
        for z in elems:
            if not curve._value(ext, emb, one, y, z):
                count += 1
    for z in elems:
        if not curve._value(ext, emb, zero, one, z):
            count += 1
    if not curve._value(ext, emb, zero, zero, one):
        count += 1
    return count


def plane_quartic_is_smooth(curve: PlaneQuartic, kmax: int = 6) -> bool:
    """No common projective zero with all three partials over F_{q^k}, k <= kmax
    (extensions beyond the enumeration cap are skipped)."""
    f = curve.field
    partials = []
    for axis in range(3):
        part = {}
        for c, (i, j, k) in zip(curve.coeffs, MONOMIALS4):
            exps = [i, j, k]
            if exps[axis] == 0:
                continue
            mult = exps[axis] % f.p
            if mult == 0 or not c:
                continue
            scaled = c
            for _ in range(mult - 1):
                scaled = scaled + c
            exps[axis] -= 1
            key = tuple(exps)
            part[key] = part.get(key, f.zero) + scaled
        partials.append(part)

    for k in range(1, kmax + 1):
        if f.q**k * f.q**k + f.q**k + 1 > MAX_POINT_ENUM:
            break
        ext = _extension(f, k)
        emb = _embed(f, ext)

        def ev(part, x, y, z):
            acc = ext.zero
            for (i, j, kk), c in part.items():
                acc = acc + emb(c) * x**i * y**j * z**kk
            return acc

        elems = list(ext.enumerate_all())
        reps = [(ext.one, y, z) for y in elems for z in elems]
        reps += [(ext.zero, ext.one, z) for z in elems]
        reps.append((ext.zero, ext.zero, ext.one))
        for x, y, z in reps:
            if curve._value(ext, emb, x, y, z):
                continue
            if not any(ev(part, x, y, z) for part in partials):
                return False
    return True


def count_artin_schreier(curve: ArtinSchreier, r: int = 1) -> int:
    """Affine solutions of y^p - y = f(x) plus the single (totally ramified)
    point over x = infinity; gcd(deg f, p) = 1 makes that count exact."""
    ext = _extension(curve.field, r)
    _guard(ext.q)
    emb = _embed(curve.field, ext)
    f = [emb(c) for c in curve.f]
    p = ext.p
    count = 0
    for x in ext.enumerate_all():
        if _pev(f, x).trace_to_prime() == 0:
            count += p
    return count + 1


def count_weierstrass(curve: Weierstrass, r: int = 1) -> int:
    ext = _extension(curve.field, r)
    _guard(ext.q)
    emb = _embed(curve.field, ext)
    a1, a2, a3, a4, a6 = (emb(c) for c in curve.a)
    count = 1  # point at infinity
    if ext.p == 2:
        for x in ext.enumerate_all():
            rhs = ((x + a2) * x + a4) * x + a6
            b = a1 * x + a3
            if not b:
                count += 1  # squaring is a bijection
            else:
                t = rhs * (b * b).inv()
                if t.trace_to_prime() == 0:
                    count += 2
    else:
        for x in ext.enumerate_all():
            rhs = ((x + a2) * x + a4) * x + a6
            b = a1 * x + a3
            disc = b * b + rhs + rhs + rhs + rhs
            count += 1 + _chi(ext, disc)
    return count


def weierstrass_trace(curve: Weierstrass, r: int = 1) -> int:
    ext = _extension(curve.field, r)
    return ext.q + 1 - count_weierstrass(curve, r)


def _count_genus1_double_cover(field: FiniteField, h) -> int:
    """Points of the smooth model of y^2 = h(x), h squarefree of degree 3 or 4."""
    count = 0
    for x in field.enumerate_all():
        count += 1 + _chi(field, _pev(h, x))
    if (len(h) - 1) % 2 == 1:
        count += 1
    else:
        count += 1 + _chi(field, h[-1])
    return count


def count_bielliptic_product(curve: BiellipticProduct, r: int = 1) -> int:
    """Three-quotient count N(E_f) + N(E_g) + N(E_fg) - 2(q^r + 1)."""
    ext = _extension(curve.field, r)
    _guard(3 * ext.q)
    emb = _embed(curve.field, ext)
    f = [emb(c) for c in curve.f]
    g = [emb(c) for c in curve.g]
    s = [emb(c) for c in curve.fg_squarefree]
    total = (
        _count_genus1_double_cover(ext, f)
        + _count_genus1_double_cover(ext, g)
        + _count_genus1_double_cover(ext, s)
    )
    return total - 2 * (ext.q + 1)


def count_bielliptic_direct(curve: BiellipticProduct, r: int = 1) -> int:
    """Independent count: affine triples (x, y1, y2), with the singular fibers
    above common roots of f and g replaced by their smooth-model points, plus
    the points above x = infinity.

    Above a common (simple) root x0 the smooth model has 1 + chi(u) points,
    u = (f/(x-x0))(x0) * (g/(x-x0))(x0); above infinity the count follows the
    ramification case split on the parities of deg f and deg g.
    """
    ext = _extension(curve.field, r)
    _guard(3 * ext.q)
    emb = _embed(curve.field, ext)
    f = [emb(c) for c in curve.f]
    g = [emb(c) for c in curve.g]
    common = _pgcd(ext, f, g)
    common_roots = [x for x in ext.enumerate_all() if not _pev(common, x)] if len(common) > 1 else []
    count = 0
    for x in ext.enumerate_all():
        if x in common_roots:
            f1 = _pdiv(ext, f, [-x, ext.one])
            g1 = _pdiv(ext, g, [-x, ext.one])
            count += 1 + _chi(ext, _pev(f1, x) * _pev(g1, x))
        else:
            count += (1 + _chi(ext, _pev(f, x))) * (1 + _chi(ext, _pev(g, x)))
    df_odd = (len(f) - 1) % 2 == 1
    dg_odd = (len(g) - 1) % 2 == 1
    if df_odd and dg_odd:
        s = [emb(c) for c in curve.fg_squarefree]
        count += 1 + _chi(ext, s[-1])
    elif df_odd:
        count += 1 + _chi(ext, g[-1])
    elif dg_odd:
        count += 1 + _chi(ext, f[-1])
    else:
        count += (1 + _chi(ext, f[-1])) * (1 + _chi(ext, g[-1]))
    return count


# -- zeta extraction and 2-torsion --------------------------------------------


def zeta_from_counts(n1: int, n2: int, n3: int, q: int) -> RealWeilPoly:
    """The unique monic degree-3 real Weil polynomial reproducing N_1..N_3.

    Power sums of the type roots follow from the eigenvalue power sums
    T_r = q^r + 1 - N_r; Newton's identities then give the coefficients,
    whose integrality is exactly the consistency condition on the counts.
    """
    t1 = q + 1 - n1
    t2 = q * q + 1 - n2
    t3 = q**3 + 1 - n3
    p1 = -t1
    p2 = t2 + 6 * q
    p3 = -t3 + 3 * q * p1
    e1 = p1
    if (e1 * p1 - p2) % 2:
        raise NonIntegralSolution(f"counts {n1},{n2},{n3} give a non-integral e2")
    e2 = (e1 * p1 - p2) // 2
    if (e2 * p1 - e1 * p2 + p3) % 3:
        raise NonIntegralSolution(f"counts {n1},{n2},{n3} give a non-integral e3")
    e3 = (e2 * p1 - e1 * p2 + p3) // 3
    h = RealWeilPoly((-e3, e2, -e1, 1), q)
    assert h.counts(3) == [n1, n2, n3]
    return h


class TwoTorsionAction(enum.Enum):
    """Frobenius action on the three nontrivial 2-torsion points."""

    FIXES_ALL3 = "FixesAll3"
    FIXES_EXACTLY1 = "FixesExactly1"
    FIXES_NONE = "FixesNone"


def two_torsion_action(curve: Weierstrass) -> TwoTorsionAction:
    """Factor the 2-division cubic over F_q: 3 rational roots fix all of
    E[2], one root fixes exactly one point, none fixes none."""
    field = curve.field
    if field.p == 2:
        raise ValueError("2-torsion classification needs odd characteristic")
    a1, a2, a3, a4, a6 = curve.a
    half = field.element(2).inv()
    quarter = half * half
    # y -> y - (a1 x + a3)/2 turns the model into Y^2 = cubic(x)
    c2 = a2 + a1 * a1 * quarter
    c1 = a4 + a1 * a3 * half
    c0 = a6 + a3 * a3 * quarter
    cubic = [c0, c1, c2, field.one]
    # number of rational roots = deg gcd(x^q - x, cubic)
    xq = _ppowmod(field, [field.zero, field.one], field.q, cubic)
    diff = list(xq)
    while len(diff) < 2:
        diff.append(field.zero)
    diff[1] = diff[1] - field.one
    while diff and not diff[-1]:
        diff.pop()
    roots = len(_pgcd(field, diff, cubic)) - 1
    return {
        3: TwoTorsionAction.FIXES_ALL3,
        1: TwoTorsionAction.FIXES_EXACTLY1,
        0: TwoTorsionAction.FIXES_NONE,
    }[roots]


def _ppowmod(field, base, n, mod):
    result = [field.one]
    base = _pmod(field, base, mod)
    while n:
        if n & 1:
            result = _pmod(field, _pmul(field, result, base), mod)
        base = _pmod(field, _pmul(field, base, base), mod)
        n >>= 1
    return result


# -- the paper-record models ---------------------------------------------------


def defect2_curve_f2() -> PlaneQuartic:
    """The 7-point quartic over F_2 (a twist of the Klein curve):
    x^3 y + y^3 z + z^3 x + x^2 y^2 + y^2 z^2 + z^2 x^2 + x^2 y z + x y^2 z = 0."""
    field = field_make(2, 1)
    return PlaneQuartic(
        field,
        {
            (3, 1, 0): 1,
            (0, 3, 1): 1,
            (1, 0, 3): 1,
            (2, 2, 0): 1,
            (0, 2, 2): 1,
            (2, 0, 2): 1,
            (2, 1, 1): 1,
            (1, 2, 1): 1,
        },
    )


def defect3_curve_f3() -> ArtinSchreier:
    """The 10-point curve y^3 - y = x^4 - x^2 over F_3."""
    return ArtinSchreier(field_make(3, 1), [0, 0, -1, 0, 1])


def klein_curve(field: FiniteField) -> PlaneQuartic:
    """x^3 y + y^3 z + z^3 x = 0 over the given field."""
    return PlaneQuartic(field, {(3, 1, 0): 1, (0, 3, 1): 1, (1, 0, 3): 1})


def defect3_curve_f4() -> PlaneQuartic:
    """A 14-point quartic over F_4, type [3, 3, 3] (the N_4(3) = 14 record):
    x^4 + x^2 y z + x y^3 + x z^3 + y^2 z^2 = 0.

    Its Jacobian is isogenous to the cube of the trace -3 elliptic curve
    (CM by Q(sqrt(-7))), the same structure the Klein quartic acquires over
    extensions; note the plane Klein model x^3 y + y^3 z + z^3 x itself has
    only 5 rational points over F_4, so the record needs this other form.
    """
    field = field_make(2, 2)
    return PlaneQuartic(
        field,
        {(4, 0, 0): 1, (2, 1, 1): 1, (1, 3, 0): 1, (1, 0, 3): 1, (0, 2, 2): 1},
    )


def defect2_product_f27():
    """The 56-point fiber product over F_27 = F_3[a]/(a^3 + 2a^2 + 1):
    y1^2 = x^3 + 2x^2 + 2x with y2^2 = 2x^3 + 2 a^4 x^2 + a^8 x."""
    field = field_make(3, 3, [1, 0, 2, 1])
    a = field.generator()
    a4 = a**4
    a8 = a**8
    two = field.element(2)
    return BiellipticProduct(
        field,
        [0, 2, 2, 1],
        [field.zero, a8, two * a4, two],
    )


# -- serialization --------------------------------------------------------------


def _field_from_dict(rec: dict) -> FiniteField:
    return field_make(rec["p"], rec["e"], rec.get("modulus"))


def _field_to_dict(field: FiniteField) -> dict:
    return {"p": field.p, "e": field.e, "modulus": list(field.modulus)}


def _coeff_to_plain(el: FieldElement):
    if all(c == 0 for c in el.coeffs[1:]):
        return el.coeffs[0]
    return list(el.coeffs)


def model_from_dict(rec: dict):
    kind = rec.get("model")
    field = _field_from_dict(rec["field"])
    if kind == "plane_quartic":
        return PlaneQuartic(field, rec["coefficients"])
    if kind == "artin_schreier":
        return ArtinSchreier(field, rec["f"])
    if kind == "weierstrass":
        a1, a2, a3, a4, a6 = rec["a"]
        return Weierstrass(field, a1, a2, a3, a4, a6)
    if kind == "bielliptic_product":
        return BiellipticProduct(field, rec["f"], rec["g"])
    raise ModelError(f"unknown model kind {kind!r}")


def model_to_dict(model) -> dict:
    if isinstance(model, PlaneQuartic):
        return {
            "model": "plane_quartic",
            "field": _field_to_dict(model.field),
            "coefficients": [_coeff_to_plain(c) for c in model.coeffs],
        }
    if isinstance(model, ArtinSchreier):
        return {
            "model": "artin_schreier",
            "field": _field_to_dict(model.field),
            "f": [_coeff_to_plain(c) for c in model.f],
        }
    if isinstance(model, Weierstrass):
        return {
            "model": "weierstrass",
            "field": _field_to_dict(model.field),
            "a": [_coeff_to_plain(c) for c in model.a],
        }
    if isinstance(model, BiellipticProduct):
        return {
            "model": "bielliptic_product",
            "field": _field_to_dict(model.field),
            "f": [_coeff_to_plain(c) for c in model.f],
            "g": [_coeff_to_plain(c) for c in model.g],
        }
    raise ModelError(f"cannot serialize {type(model).__name__}")


def count_model(model, r: int = 1) -> int:
    """Dispatch on the model kind."""
    if isinstance(model, PlaneQuartic):
        return count_plane_quartic(model, r)
    if isinstance(model, ArtinSchreier):
        return count_artin_schreier(model, r)
    if isinstance(model, Weierstrass):
        return count_weierstrass(model, r)
    if isinstance(model, BiellipticProduct):
        return count_bielliptic_product(model, r)
    raise ModelError(f"cannot count {type(model).__name__}")
