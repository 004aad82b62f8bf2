from fractions import Fraction

import pytest

from genus3bounds.arith import isqrt
from genus3bounds.serre import Family, PerfectSquareInput, decompose, defect2_type_forced, theorem_family
from helpers import small_prime_powers

DECOMP_TABLE = {
    # q: (x, a, m, d)
    5: (2, -1, 4, -4),
    3: (1, 1, 3, -3),
    41: (6, -1, 12, -20),
    343: (18, 1, 37, -3),
    27: (5, -3, 10, -8),
    2: (1, 0, 2, -4),
}


@pytest.mark.parametrize("q,expected", sorted(DECOMP_TABLE.items()))
def test_decompose_examples(q, expected):
    dec = decompose(q)
    assert (dec.x, dec.a, dec.m, dec.d) == expected
    assert dec.dprime == dec.d - 2 * dec.m + 1 == (dec.m - 1) ** 2 - 4 * q


def test_case_formulas_match_direct_definitions_up_to_1e6():
    for q in small_prime_powers(10**6):
        x = isqrt(q)
        a = q - x * x - x
        m = 2 * x if a <= 0 else 2 * x + 1
        d = -4 * (x + a) if a <= 0 else 1 - 4 * a
        assert m == isqrt(4 * q)
        assert d == m * m - 4 * q
        dec = decompose(q)  # includes its own internal cross-checks
        assert (dec.x, dec.m, dec.d) == (x, m, d)
        assert -x <= dec.a <= x
        assert (d == 0) == (x * x == q)


@pytest.mark.parametrize(
    "q,family",
    [(7, Family.D3_11), (3, Family.D3_11), (13, Family.D3_11), (23, Family.D3_11),
     (17, Family.D4_8), (5, Family.D4_8), (2, Family.D4_8), (11, Family.D4_8), (27, Family.D4_8),
     (41, Family.OTHER), (19, Family.OTHER), (4, Family.OTHER), (9, Family.OTHER)],
)
def test_theorem_family(q, family):
    assert theorem_family(decompose(q)) is family


def test_family_discriminants():
    for q in small_prime_powers(5000):
        dec = decompose(q)
        fam = theorem_family(dec)
        if fam is Family.D3_11:
            assert dec.d in (-3, -11)
        elif fam is Family.D4_8:
            assert dec.d in (-4, -8)
        else:
            assert dec.d not in (-3, -4, -8, -11)


def _frac_part_test_oracle(q: int) -> bool:
    """{2 sqrt(q)} < sqrt(3) - 1 via 100-digit fixed-point arithmetic."""
    scale = 10**100
    two_sqrt_q = isqrt(4 * q * scale * scale)
    frac = two_sqrt_q - isqrt(4 * q) * scale
    sqrt3_minus_1 = isqrt(3 * scale * scale) - scale
    assert frac != sqrt3_minus_1  # sqrt(3) irrational, q not a square
    return frac < sqrt3_minus_1


def test_defect2_examples():
    assert defect2_type_forced(decompose(7)) is True
    assert defect2_type_forced(decompose(2)) is False
    with pytest.raises(PerfectSquareInput):
        defect2_type_forced(decompose(9))


def test_defect2_forced_for_all_x2_x_1():
    for q in small_prime_powers(10**6):
        dec = decompose(q)
        if dec.a == 1:
            assert defect2_type_forced(dec)


def test_defect2_agrees_with_fixed_point_oracle():
    for q in small_prime_powers(10**6):
        dec = decompose(q)
        if dec.d == 0:
            continue
        assert defect2_type_forced(dec) == _frac_part_test_oracle(q), q


def test_serre_weil_window():
    dec = decompose(7)
    assert dec.serre_weil_max == 23 and dec.serre_weil_min == -7
