import random
from fractions import Fraction

import pytest

from genus3bounds.qorder import (
    MixedDiscriminants,
    OrderElement,
    QuadOrder,
    class_number,
    closest_element,
    covering_radius_sq,
    elements_in_disk,
    norm_representations,
    norm_uv,
    represents_norm,
    units,
)


def test_norm_examples():
    assert OrderElement(-4, 1, 1).norm() == 2  # 1 + i
    assert OrderElement(-11, -1, 1).norm() == 1 - 1 + 3
    w8 = QuadOrder(-8).omega
    assert (w8.conj() * w8) == QuadOrder(-8).element(2)


def test_conjugation_involution_and_norm_identity():
    rng = random.Random(2)
    for d in (-3, -4, -7, -8, -11, -15, -20):
        for _ in range(100):
            x = OrderElement(d, rng.randint(-9, 9), rng.randint(-9, 9))
            assert x.conj().conj() == x
            prod = x * x.conj()
            assert (prod.u, prod.v) == (x.norm(), 0)
            assert x.trace() == (x + x.conj()).u


def test_norm_multiplicativity():
    rng = random.Random(4)
    for d in (-3, -4, -8, -11, -20):
        for _ in range(200):
            x = OrderElement(d, rng.randint(-9, 9), rng.randint(-9, 9))
            y = OrderElement(d, rng.randint(-9, 9), rng.randint(-9, 9))
            assert (x * y).norm() == x.norm() * y.norm()


def test_mixed_discriminants_rejected():
    with pytest.raises(MixedDiscriminants):
        OrderElement(-3, 1, 0) + OrderElement(-4, 1, 0)


def test_represents_norm_examples():
    assert represents_norm(-11, 2) is None
    assert represents_norm(-11, 7) is None
    w = represents_norm(-4, 2)
    assert w is not None and w.norm() == 2
    assert represents_norm(-3, 0) == QuadOrder(-3).zero


def test_represents_norm_against_naive_double_loop():
    for d in (-3, -4, -7, -8, -11, -20):
        for n in range(51):
            naive = sorted(
                {(u, v) for u in range(-n - 1, n + 2) for v in range(-n - 1, n + 2) if norm_uv(d, u, v) == n}
            )
            got = [(el.u, el.v) for el in norm_representations(d, n)]
            assert got == naive, (d, n)


def test_class_numbers():
    assert class_number(-3) == class_number(-4) == class_number(-8) == class_number(-11) == 1
    assert class_number(-20) == 2
    assert class_number(-7) == 1
    for d in (-3, -4, -7, -8, -11, -19, -43, -67, -163):
        assert class_number(d) == 1, d
    assert class_number(-15) == 2
    assert class_number(-23) == 3


def test_covering_radius_values():
    assert covering_radius_sq(-3) == Fraction(1, 3)
    assert covering_radius_sq(-11) == Fraction(9, 11)
    assert covering_radius_sq(-4) == Fraction(1, 2)
    assert covering_radius_sq(-8) == Fraction(3, 4)


def test_units():
    assert len(units(-3)) == 6
    assert len(units(-4)) == 4
    assert len(units(-8)) == len(units(-11)) == 2


def test_closest_element_zero_and_deep_holes():
    assert closest_element(-3, Fraction(0), Fraction(0)) == QuadOrder(-3).zero
    # deep hole of R_-3 in omega-coordinates: (1/3, 1/3), distance^2 = 1/3
    z = (Fraction(1, 3), Fraction(1, 3))
    r = closest_element(-3, *z)
    assert norm_uv(-3, z[0] - r.u, z[1] - r.v) == Fraction(1, 3)
    ties = [
        el
        for el in elements_in_disk(-3, z[0], z[1], Fraction(1, 3))
        if norm_uv(-3, z[0] - el.u, z[1] - el.v) == Fraction(1, 3)
    ]
    assert len(ties) == 3  # three equidistant lattice points around the hole
    # deep hole of Z[i]: (1/2, 1/2), distance^2 = 1/2
    r = closest_element(-4, Fraction(1, 2), Fraction(1, 2))
    assert norm_uv(-4, Fraction(1, 2) - r.u, Fraction(1, 2) - r.v) == Fraction(1, 2)


def _deep_hole(d):
    """A point achieving the covering radius, in (u, v) coordinates."""
    if d % 4 == 0:
        return (Fraction(1, 2), Fraction(1, 2))
    # xy-coordinates (1/2, (|d|-1)/(4 sqrt(|d|))) pull back to
    # v = y / (sqrt(|d|)/2) = (|d|-1)/(2|d|), u = 1/2 - v/2
    v = Fraction(-d - 1, 2 * -d)
    return (Fraction(1, 2) - v / 2, v)


def test_covering_radius_inequality_random_points():
    rng = random.Random(17)
    for d in (-3, -4, -7, -8, -11, -15, -19, -20):
        c = covering_radius_sq(d)
        hole = _deep_hole(d)
        r = closest_element(d, *hole)
        assert norm_uv(d, hole[0] - r.u, hole[1] - r.v) == c, d
        for _ in range(10_000):
            zu = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
            zv = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
            r = closest_element(d, zu, zv)
            assert norm_uv(d, zu - r.u, zv - r.v) <= c


def test_closest_element_tie_break_deterministic():
    # the deep hole of R_-3 has three closest points; smallest (u, v) wins
    z = (Fraction(1, 3), Fraction(1, 3))
    r = closest_element(-3, *z)
    assert (r.u, r.v) == (0, 0)
