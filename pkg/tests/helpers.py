"""Shared test oracles, kept independent of the code paths they check."""

from genus3bounds.arith import factor_prime_power, field_make
from genus3bounds.curves import SingularCurve, Weierstrass, weierstrass_trace


def all_elliptic_traces(q: int) -> set:
    """Every Frobenius trace of an elliptic curve over F_q, by exhausting
    reduced Weierstrass families (each isomorphism class has a member):

      char 2:  ordinary y^2 + xy = x^3 + a2 x^2 + a6 (a6 != 0) and
               supersingular y^2 + a3 y = x^3 + a4 x + a6 (a3 != 0)
      char 3:  y^2 = x^3 + a2 x^2 + a4 x + a6 with a2 in {0, 1, nonsquare}
               (x -> u^2 x rescales a2 by squares)
      char>3:  y^2 = x^3 + a x + b
    """
    pp = factor_prime_power(q)
    field = field_make(pp.p, pp.e)
    traces = set()

    def note(model):
        traces.add(weierstrass_trace(model))

    if pp.p == 2:
        for a2 in field.enumerate_all():
            for a6 in field.enumerate_all():
                if a6:
                    note(Weierstrass(field, 1, a2, 0, 0, a6))
        for a3 in field.enumerate_all():
            if not a3:
                continue
            for a4 in field.enumerate_all():
                for a6 in field.enumerate_all():
                    note(Weierstrass(field, 0, 0, a3, a4, a6))
    elif pp.p == 3:
        squares = {x * x for x in field.enumerate_all() if x}
        nonsquare = next(x for x in field.enumerate_all() if x and x not in squares)
        for a2 in (field.zero, field.one, nonsquare):
            for a4 in field.enumerate_all():
                for a6 in field.enumerate_all():
                    try:
                        note(Weierstrass(field, 0, a2, 0, a4, a6))
                    except SingularCurve:
                        continue
    else:
        for a in field.enumerate_all():
            for b in field.enumerate_all():
                try:
                    note(Weierstrass.short(field, a, b))
                except SingularCurve:
                    continue
    return traces


def small_prime_powers(limit: int) -> list:
    """All prime powers in [2, limit], by sieve."""
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    primes = [i for i in range(2, limit + 1) if sieve[i]]
    out = list(primes)
    for p in primes:
        pe = p * p
        while pe <= limit:
            out.append(pe)
            pe *= p
    return sorted(out)
