import math
import random

import pytest
from hypothesis import given, strategies as st

from cubicff import gfq
from cubicff import polyrat as pr
from cubicff.errors import NegativeValuation, ZeroPolynomial

from conftest import F, P, PL, R, rand_poly, rand_ratfunc


def test_factor_examples():
    F5, F2 = F(5), F(2)
    fac = P(F5, "x^2+2").factor()
    assert len(fac.factors) == 1 and fac.factors[0][1] == 1
    fac2 = P(F5, "x^2-1").factor()
    assert [(str(p), e) for p, e in fac2] == [("x+1", 1), ("x+4", 1)]
    fac3 = P(F2, "x^4+x").factor()
    assert [(str(p), e) for p, e in fac3] == [("x", 1), ("x+1", 1), ("x^2+x+1", 1)]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11])
def test_factor_rebuild_roundtrip(q):
    Fq = F(q)
    rng = random.Random(100 + q)
    for _ in range(12):
        f = rand_poly(Fq, rng, rng.randrange(1, 13), nonzero=True)
        assert f.factor().rebuild() == f


def test_factor_deterministic():
    F5 = F(5)
    rng = random.Random(7)
    for _ in range(10):
        f = rand_poly(F5, rng, 9, nonzero=True)
        assert f.factor() == f.factor()


def test_zero_factor_raises():
    with pytest.raises(ZeroPolynomial):
        pr.FqPoly.zero(F(5)).factor()


def test_valuation_examples():
    F5 = F(5)
    a = R(F5, "(2*x^2+1)/(x^2+2)")
    assert pr.valuation(a, PL(F5, "x^2+2")) == -1
    assert pr.valuation(pr.RatFunc.x(F5), pr.Place.infinity()) == -1
    assert pr.valuation(pr.RatFunc.one(F5), PL(F5, "x")) == 0
    assert pr.valuation(pr.RatFunc.zero(F5), PL(F5, "x")) == math.inf


@pytest.mark.parametrize("q", [2, 5, 9])
def test_principal_divisor_degree_zero(q):
    Fq = F(q)
    rng = random.Random(200 + q)
    for _ in range(8):
        r = rand_ratfunc(Fq, rng, rng.randrange(5), rng.randrange(5), nonzero=True)
        total = -pr.valuation(r, pr.Place.infinity())  # deg num - deg den
        acc = 0
        for fpoly, e in r.num.factor():
            acc += e * fpoly.degree
        for fpoly, e in r.den.factor():
            acc -= e * fpoly.degree
        assert acc == total  # finite valuations sum to -v_inf, weighted by degree


def test_residue_examples():
    F5 = F(5)
    a = R(F5, "(2*x^2+1)/(x^2+2)")
    assert pr.residue(a, PL(F5, "x+1")).code == 1
    assert pr.residue(a, PL(F5, "x+2")).code == 4
    assert pr.residue(pr.RatFunc.zero(F5), PL(F5, "x")).code == 0
    with pytest.raises(NegativeValuation):
        pr.residue(a, PL(F5, "x^2+2"))


@pytest.mark.parametrize("q,place", [(5, "x+1"), (5, "x^2+2"), (2, "x^2+x+1"), (8, "x^2+t*x+1")])
def test_residue_is_ring_hom(q, place):
    Fq = F(q)
    p = PL(Fq, place)
    rng = random.Random(11)
    for _ in range(6):
        r = rand_ratfunc(Fq, rng, 3, 2, nonzero=True)
        s = rand_ratfunc(Fq, rng, 2, 3, nonzero=True)
        if pr.valuation(r, p) < 0 or pr.valuation(s, p) < 0 or pr.valuation(r * s, p) < 0:
            continue
        K = pr.residue_field(Fq, p).field
        assert pr.residue(r * s, p).code == K.mul(pr.residue(r, p).code, pr.residue(s, p).code)
        assert pr.residue(r + s, p).code == K.add(pr.residue(r, p).code, pr.residue(s, p).code)


def test_residue_field_lift():
    F5 = F(5)
    p = PL(F5, "x^2+2")
    rf = pr.residue_field(F5, p)
    for code in range(0, 25, 3):
        lifted = rf.lift(code)
        assert lifted.degree < 2 or lifted.is_zero()
        assert rf.reduce_poly(lifted) == code


def test_factor_over_quad_ext_examples():
    F5, F2 = F(5), F(2)
    ext = gfq.quad_ext(F5)
    fac = pr.factor_over_quad_ext(P(F5, "x^2+2"), ext)
    assert len(fac.factors) == 2
    prod = fac.rebuild()
    assert pr.split_pair_poly(prod)[0] == P(F5, "x^2+2")
    assert len(pr.factor_over_quad_ext(P(F5, "x+1"), ext).factors) == 1
    ext2 = gfq.quad_ext(F2)
    fac2 = pr.factor_over_quad_ext(P(F2, "x^2+x+1"), ext2)
    assert len(fac2.factors) == 2


@pytest.mark.parametrize("q", [2, 5])
def test_quad_ext_conjugate_pair_split_exhaustive(q):
    """Even-degree irreducibles split into two conjugates, odd stay prime."""
    Fq = F(q)
    ext = gfq.quad_ext(Fq)
    for d in range(1, 5):
        for code in range(Fq.q**d):
            coeffs = []
            c = code
            for _ in range(d):
                coeffs.append(c % Fq.q)
                c //= Fq.q
            f = pr.FqPoly(Fq, coeffs + [Fq.one])
            if not f.is_irreducible():
                continue
            fac = pr.factor_over_quad_ext(f, ext)
            if d % 2 == 0:
                assert len(fac.factors) == 2
                (f1, e1), (f2, e2) = fac.factors
                assert (e1, e2) == (1, 1)
                assert pr.conj_poly(f1).monic() == f2.monic()
            else:
                assert len(fac.factors) == 1


def test_is_cube_up_to_unit():
    F5 = F(5)
    ext = gfq.quad_ext(F5)
    xt = pr.pair_poly(P(F5, "x"), P(F5, "1"), ext)  # x + t
    unit, h, is_cube = pr.is_cube_up_to_unit(xt**3)
    assert unit == 1 and h == xt.monic() and is_cube
    noncube = next(c for c in range(2, ext.q) if not ext.is_cube(c))
    unit2, _, is_cube2 = pr.is_cube_up_to_unit((xt**3).scale(noncube))
    assert unit2 == noncube and not is_cube2
    assert pr.is_cube_up_to_unit(xt**2 * pr.conj_poly(xt)) is None


def test_poly_parse_print_roundtrip():
    F8 = gfq.make_field(2, 3)
    rng = random.Random(3)
    for _ in range(20):
        f = rand_poly(F8, rng, rng.randrange(5))
        assert P(F8, str(f)) == f
    F5 = F(5)
    for s in ("0", "1", "x", "2*x^2+1", "x^3-x", "-x+2"):
        f = P(F5, s)
        assert P(F5, str(f)) == f


def test_rat_parse_forms():
    F5 = F(5)
    assert str(R(F5, "1/x")) == "(1)/(x)"
    assert str(R(F5, "(2*x^2+1)/(x^2+2)")) == "(2*x^2+1)/(x^2+2)"
    assert str(R(F5, "x*(x+1)^2")) == "x^3+2*x^2+x"
    assert R(F5, "x^2/x") == R(F5, "x")


def test_place_parse():
    F5 = F(5)
    assert PL(F5, "inf").is_infinite
    assert PL(F5, "x^2+2").degree == 2
    with pytest.raises(Exception):
        PL(F5, "x^2-1")  # reducible


def test_substitute_inverse():
    F5 = F(5)
    r = R(F5, "(2*x^2+1)/(x^3+2)")
    s = pr.ratfunc_substitute_inverse(r)
    # evaluate both at x = 1 (self-inverse point) to cross-check
    val = F5.div(r.num.evaluate(1), r.den.evaluate(1))
    val2 = F5.div(s.num.evaluate(1), s.den.evaluate(1))
    assert val == val2
    assert pr.valuation(s, PL(F5, "x")) == pr.valuation(r, pr.Place.infinity())


@given(st.sampled_from([2, 5, 9]), st.integers(0, 10**9))
def test_ratfunc_sqrt_of_square(q, seed):
    Fq = F(q)
    rng = random.Random(seed)
    r = rand_ratfunc(Fq, rng, 2, 2, nonzero=True)
    s = pr.ratfunc_sqrt(r * r)
    assert s is not None and s * s == r * r
