import random

import pytest

from genus3bounds.weil import (
    RealWeilPoly,
    RootOutOfWeilRange,
    admissible,
    counts_from_type,
    elliptic_trace_exists,
    type_to_poly,
)
from helpers import all_elliptic_traces, small_prime_powers


def _counts_oracle(xs, q, rmax):
    """Independent route: per-root eigenvalue power sums by direct recurrence."""
    out = []
    for r in range(1, rmax + 1):
        total = 0
        for x in xs:
            s_prev, s_cur = 2, -x
            for _ in range(r - 1):
                s_prev, s_cur = s_cur, -x * s_cur - q * s_prev
            total += s_cur if r >= 1 else 2
        out.append(q**r + 1 - total)
    return out


def test_type_to_poly_examples():
    h = type_to_poly([2, 2, 0], 2)
    assert h.coeffs == (0, 4, -4, 1)  # (t-2)^2 * t
    h = type_to_poly([3, 3, 0], 3)
    assert h.coeffs == (0, 9, -6, 1)
    assert type_to_poly([0, 0, 0], 5).coeffs == (0, 0, 0, 1)
    with pytest.raises(RootOutOfWeilRange):
        type_to_poly([3, 0, 0], 2)  # 3 > 2*sqrt(2)


def test_direct_polynomial_for_irrational_types():
    h = RealWeilPoly((4, 2, -4, 1), 2)  # roots 2, 1 +- sqrt(3)
    assert h.counts(2) == [7, 5]
    assert h.integer_roots() is None
    with pytest.raises(RootOutOfWeilRange):
        RealWeilPoly((1, 0, 0, 1), 7)  # t^3 + 1: complex roots


@pytest.mark.parametrize(
    "xs,q,prefix",
    [
        ([2, 2, 0], 2, [7, None, 1]),
        ([12, 12, 12], 41, [78]),
        ([2, 2, 2], 3, [10, None, -2]),
        ([-2, -2, -2], 3, [-2]),
    ],
)
def test_counts_examples(xs, q, prefix):
    counts = counts_from_type(type_to_poly(xs, q), len(prefix))
    for got, want in zip(counts, prefix):
        if want is not None:
            assert got == want


def test_counts_match_independent_recurrence():
    rng = random.Random(3)
    for _ in range(200):
        q = rng.choice([2, 3, 4, 5, 7, 9, 11, 13, 25, 27])
        import math

        m = math.isqrt(4 * q)
        xs = [rng.randint(-m, m) for _ in range(rng.choice([1, 2, 3]))]
        h = type_to_poly(xs, q)
        assert h.counts(6) == _counts_oracle(xs, q, 6)


def test_counts_are_integers_for_irrational_types():
    h = RealWeilPoly((1, 3, -4, 1), 2)
    assert all(isinstance(n, int) for n in h.counts(10))


def test_admissible_examples():
    v = admissible(type_to_poly([2, 2, 0], 2))
    assert not v.ok
    assert v.violations[0].kind == "count_not_monotone"
    assert v.violations[0].detail == (1, 3, 7, 1)

    v = admissible(type_to_poly([-2, -2, -2], 3))
    assert not v.ok and v.violations[0].detail == (1, -2)

    v = admissible(type_to_poly([2, 2, 2], 3))
    assert not v.ok
    assert v.violations[0].kind == "negative_count" and v.violations[0].detail == (3, -2)

    assert admissible(type_to_poly([4, 4, 4], 7)).ok


def test_admissible_on_raw_coefficients():
    v = admissible((1, 0, 0, 1), q=7)
    assert not v.ok and v.violations[0].kind == "roots_not_real_weil"


def test_monotone_property_of_admissible_types():
    rng = random.Random(9)
    import math

    for _ in range(300):
        q = rng.choice([2, 3, 5, 7, 9, 13])
        m = math.isqrt(4 * q)
        xs = [rng.randint(-m, m) for _ in range(3)]
        verdict = admissible(type_to_poly(xs, q))
        if verdict.ok:
            c = verdict.counts
            for r in range(1, 7):
                assert c[r - 1] >= 0
                for s in range(1, r):
                    if r % s == 0:
                        assert c[s - 1] <= c[r - 1]


def test_twist_reflects_count():
    rng = random.Random(21)
    import math

    for _ in range(100):
        q = rng.choice([3, 5, 7, 11, 27])
        m = math.isqrt(4 * q)
        xs = [rng.randint(-m, m) for _ in range(3)]
        h = type_to_poly(xs, q)
        assert h.twist().counts(1)[0] == 2 * (q + 1) - h.counts(1)[0]
    # genus 1: N = q + 1 + x
    h = type_to_poly([4], 7)
    assert h.counts(1) == [12]


@pytest.mark.parametrize(
    "q,t,expected",
    [
        (343, 35, False),
        (343, -35, False),
        (243, 30, False),
        (243, -30, False),
        (243, 31, True),
        (2, 2, True),
        (4, 4, True),   # e even, t = 2 sqrt(q)
        (4, 2, True),   # e even, t = sqrt(q), p = 2 not 1 mod 3
        (9, 3, True),
        (9, 0, True),   # e even, p = 3 not 1 mod 4
        (25, 0, False),  # e even, p = 5 = 1 mod 4: t = 0 not admissible
        (343, 38, False),  # exceeds the Weil interval
    ],
)
def test_elliptic_trace_exists_examples(q, t, expected):
    assert elliptic_trace_exists(q, t) is expected


def test_elliptic_trace_exhaustive_oracle_small_fields():
    import math

    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27]:
        actual = all_elliptic_traces(q)
        m = math.isqrt(4 * q)
        for t in range(-m - 1, m + 2):
            assert elliptic_trace_exists(q, t) == (t in actual), (q, t)


def test_ordinary_traces_always_exist():
    from math import gcd, isqrt

    for q in small_prime_powers(400):
        from genus3bounds.arith import factor_prime_power

        p = factor_prime_power(q).p
        m = isqrt(4 * q)
        for t in range(-m, m + 1):
            if gcd(t, p) == 1:
                assert elliptic_trace_exists(q, t)
