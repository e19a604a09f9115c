import random

import pytest
from hypothesis import settings

from cubicff import galoiskit as gk
from cubicff import gfq
from cubicff import normalform as nf
from cubicff.polyrat import FqPoly, Place, RatFunc, place_parse, poly_parse, rat_parse

settings.register_profile("suite", max_examples=25, deadline=None)
settings.load_profile("suite")


def F(q):
    return gfq.make_field_q(q)


def P(field, s):
    return poly_parse(field, s)


def R(field, s):
    return rat_parse(field, s)


def PL(field, s):
    return place_parse(field, s)


def rand_poly(field, rng, deg, nonzero=False, monic=False):
    while True:
        coeffs = [rng.randrange(field.q) for _ in range(deg + 1)]
        if monic:
            coeffs[-1] = field.one
        f = FqPoly(field, coeffs)
        if not nonzero or not f.is_zero():
            return f


def rand_ratfunc(field, rng, num_deg, den_deg, nonzero=False):
    num = rand_poly(field, rng, num_deg, nonzero=nonzero)
    den = rand_poly(field, rng, den_deg, nonzero=True)
    return RatFunc(num, den)


def rand_coprime_pair(field, rng, max_deg):
    while True:
        A = rand_poly(field, rng, rng.randrange(max_deg + 1), nonzero=True)
        B = rand_poly(field, rng, rng.randrange(max_deg + 1), nonzero=True)
        g = A.gcd(B)
        if g.degree == 0:
            return A, B


def rand_galois_standard(field, rng, max_deg=2, require_irreducible=False):
    """A random Galois standard parameter from the norm-form construction,
    skipping the degenerate a in {0, +-2} and constant parameters."""
    while True:
        A, B = rand_coprime_pair(field, rng, max_deg)
        a = gk.construct_galois_a(A, B)
        if a.is_zero() or (a * a - 4).is_zero() or a.is_constant():
            continue
        if require_irreducible and not gk.is_irreducible_standard(a):
            continue
        return a


def rand_as_standard(field, rng, max_deg=2):
    """A random nonconstant Hasse-standard Artin-Schreier parameter (p=3)."""
    while True:
        a = rand_ratfunc(field, rng, rng.randrange(max_deg + 1), rng.randrange(max_deg + 1), nonzero=True)
        try:
            std = nf.as_standardize(a)
        except Exception:
            continue
        if std.is_constant():
            continue
        return std


def rand_kummer_standard(field, rng, max_factors=2):
    """A random standardized Kummer parameter over q = 1 mod 3."""
    while True:
        a = FqPoly.const(field, rng.randrange(1, field.q))
        for _ in range(rng.randrange(1, max_factors + 1)):
            f = rand_poly(field, rng, rng.randrange(1, 3), nonzero=True, monic=True)
            if f.degree < 1:
                continue
            a = a * f ** rng.randrange(1, 3)
        r = RatFunc(a)
        try:
            std = nf.kummer_standardize(r)
        except Exception:
            continue
        if std.is_constant():
            continue
        return std


def irreducible_places(field, max_degree):
    """All finite places of degree <= max_degree, plus infinity."""
    out = [Place.infinity()]
    for d in range(1, max_degree + 1):
        for code in range(field.q**d):
            coeffs = []
            c = code
            for _ in range(d):
                coeffs.append(c % field.q)
                c //= field.q
            f = FqPoly(field, coeffs + [field.one])
            if f.is_irreducible():
                out.append(Place(f))
    return out


@pytest.fixture
def rng():
    return random.Random(20260809)
