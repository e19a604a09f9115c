"""Acceptance suite: every criterion runs at its stated size and tolerance
(all checks are exact) and prints one pass line.  Run with `pytest -s
tests/test_acceptance.py` to see the per-criterion lines."""

import random

import pytest

from cubicff import action as act
from cubicff import galoiskit as gk
from cubicff import gfq
from cubicff import intbasis as ib
from cubicff import normalform as nf
from cubicff import placegeom as pg
from cubicff import ringops as ro
from cubicff.errors import ReducibleInput, ZeroConstantTerm
from cubicff.polyrat import FqPoly, RatFunc, poly_valuation, valuation

from conftest import (
    F,
    P,
    PL,
    R,
    irreducible_places,
    rand_as_standard,
    rand_coprime_pair,
    rand_galois_standard,
    rand_kummer_standard,
    rand_poly,
    rand_ratfunc,
)


def report(n, text):
    print(f"criterion {n:2d}: {text} ... PASS")


def test_criterion_01_unit_norm_rep_count():
    total = 0
    for q in (2, 5, 8, 11, 17, 23, 29, 32):
        Fq = F(q)
        for w in range(1, q):
            assert len(gfq.enumerate_unit_norm_reps(Fq.elem(w))) == q + 1
            total += 1
    report(1, f"q+1 norm representations for all {total} nonzero constants, q <= 32")


def test_criterion_02_construction_is_galois():
    count = 0
    for q in (2, 5, 8, 11):
        Fq = F(q)
        rng = random.Random(1000 + q)
        while count < 50 * ((2, 5, 8, 11).index(q) + 1):
            A, B = rand_coprime_pair(Fq, rng, 3)
            a = gk.construct_galois_a(A, B)
            if a.is_zero() or (a * a - 4).is_zero():
                continue
            canon = nf.CanonicalCubic(nf.STANDARD, a, ())
            galois, _ = gk.is_galois(canon)
            assert galois
            count += 1
    assert count >= 200
    report(2, f"{count} random norm-form constructions are Galois (disc/resolvent)")


def test_criterion_03_irreducibility_vs_oracle():
    agree = 0
    reducible_converse = 0
    for q in (2, 5, 8, 11):
        Fq = F(q)
        rng = random.Random(2000 + q)
        per_field = 0
        while per_field < 50:
            A, B = rand_coprime_pair(Fq, rng, 3)
            a = gk.construct_galois_a(A, B)
            if a.is_zero() or (a * a - 4).is_zero():
                continue
            assert gk.is_irreducible_standard(a) == gk.is_irreducible_standard_oracle(a)
            agree += 1
            per_field += 1
        # converse construction: r^3 - 3r always reduces
        built = 0
        while built < 5:
            A, B = rand_coprime_pair(Fq, rng, 2)
            r = gk.construct_galois_a(A, B)
            a_red = r**3 - 3 * r
            if a_red.is_zero() or (a_red * a_red - 4).is_zero():
                continue
            assert not gk.is_irreducible_standard(a_red)
            assert not gk.is_irreducible_standard_oracle(a_red)
            built += 1
            reducible_converse += 1
    assert agree >= 200
    report(3, f"{agree} oracle agreements, {reducible_converse} converse constructions reducible")


def test_criterion_04_galois_action_identities():
    checked = 0
    for q in (2, 5, 8, 11):
        Fq = F(q)
        rng = random.Random(3000 + q)
        while checked < 25 * ((2, 5, 8, 11).index(q) + 1):
            a = rand_galois_standard(Fq, rng, max_deg=2, require_irreducible=True)
            ad = act.galois_action(a)
            ring = act.CubicRing.standard(a)
            z = ring.y
            s, s2 = ad.sigma(ring), ad.sigma2(ring)
            assert (s * s * s - s * 3 - ring.from_ratfunc(a)).is_zero()
            assert not (s - z).is_zero()
            assert (ad.apply(ring, ad.apply(ring, s)) - z).is_zero()
            assert (z + s + s2).is_zero()
            assert (z * s * s2 - ring.from_ratfunc(a)).is_zero()
            checked += 1
    assert checked >= 100
    report(4, f"{checked} Galois actions satisfy all quotient-ring identities")


def test_criterion_05_transform_roundtrip():
    # pinned instance
    tr = act.transform_generator(R(F(5), "1"), act.ConicPoint(R(F(5), "1"), R(F(5), "0")))
    assert tr.a2 == R(F(5), "4")
    done = 0
    for q in (2, 5, 8, 11):
        Fq = F(q)
        rng = random.Random(4000 + q)
        while done < 25 * ((2, 5, 8, 11).index(q) + 1):
            a1 = rand_galois_standard(Fq, rng, max_deg=1, require_irreducible=True)
            c = rand_ratfunc(Fq, rng, 1, 0, nonzero=True)
            d = rand_ratfunc(Fq, rng, 0, 0)
            pt = act.conic_point_from_pair(a1, c, d)
            if pt is None:
                continue
            trr = act.transform_generator(a1, pt)  # verifies z2^3 - 3 z2 = a2
            prod = ro.matmul3(trr.forward, trr.inverse)
            iden = ro.identity3(Fq)
            assert all(prod[i][j] == iden[i][j] for i in range(3) for j in range(3))
            if trr.a2.is_zero() or (trr.a2 * trr.a2 - 4).is_zero():
                continue
            back = act.same_field_standard(a1, trr.a2)
            assert back is not None
            assert act.transform_generator(a1, back).a2 == trr.a2
            done += 1
    assert done >= 100
    report(5, f"{done} conic transforms verified and recovered by same_field_standard")


def test_criterion_06_ramification_genus_basis_coherence():
    # pinned running example
    F5 = F(5)
    a0 = R(F5, "(2*x^2+1)/(x^2+2)")
    canon0 = nf.CanonicalCubic(nf.STANDARD, a0, ())
    assert [str(rp.place) for rp in pg.ramified_places(canon0)] == ["x^2+2"]
    assert pg.genus(canon0) == 0
    checked = 0
    for q in (2, 5, 8, 11):
        Fq = F(q)
        rng = random.Random(5000 + q)
        per_field = 0
        while per_field < 10:
            a = rand_galois_standard(Fq, rng, max_deg=3, require_irreducible=True)
            canon = nf.CanonicalCubic(nf.STANDARD, a, ())
            if gk.is_constant_extension(canon):
                continue
            rams = pg.ramified_places(canon)
            basis = ib.standard_integral_basis(a)  # integrality checked inside
            disc = ib.basis_discriminant(basis)
            assert disc.is_polynomial()
            disc_places = {str(f): e for f, e in disc.num.factor()}
            assert disc_places == {str(rp.place): 2 for rp in rams}
            g = pg.genus(canon)
            g_rh = -2 + sum(rp.diff_exponent * rp.degree() for rp in rams) // 2
            assert g == g_rh == -2 + sum(rp.degree() for rp in rams)
            per_field += 1
            checked += 1
    report(6, f"{checked} extensions: ramified set = disc ideal, genus = Riemann-Hurwitz")


def test_criterion_07_splitting_vs_residue_oracle():
    # directed q = 5 cases: abar = 1 and abar = -1 are inert
    F5 = F(5)
    a0 = R(F5, "(2*x^2+1)/(x^2+2)")
    canon0 = nf.CanonicalCubic(nf.STANDARD, a0, ())
    assert pg.splitting_type(canon0, PL(F5, "x+1")) == pg.INERT  # abar = 1
    assert pg.splitting_type(canon0, PL(F5, "x+2")) == pg.INERT  # abar = -1
    assert pg.splitting_type(canon0, PL(F5, "x+3")) == pg.INERT  # abar = -1
    assert pg.splitting_type(canon0, PL(F5, "x")) == pg.TOTALLY_SPLIT  # abar = 3, not +-1 or +-2
    compared = 0
    for q in (2, 5, 8):
        Fq = F(q)
        rng = random.Random(6000 + q)
        places = irreducible_places(Fq, 2)
        per_field = 0
        while per_field < 3:
            a = rand_galois_standard(Fq, rng, max_deg=2, require_irreducible=True)
            canon = nf.CanonicalCubic(nf.STANDARD, a, ())
            if gk.is_constant_extension(canon):
                continue
            basis = ib.standard_integral_basis(a)
            for pl in places:
                st = pg.splitting_type(canon, pl)
                if not pl.is_infinite:
                    assert st == pg.split_via_order(canon, basis, pl)
                    compared += 1
            per_field += 1
    report(7, f"{compared} place classifications agree with the order-decomposition oracle")


def test_criterion_08_cross_family_suites():
    as_checked = kummer_checked = 0
    for q in (3, 9):
        Fq = F(q)
        rng = random.Random(7000 + q)
        for _ in range(25):
            a = rand_as_standard(Fq, rng)
            canon = nf.CanonicalCubic(nf.ARTIN_SCHREIER, a, ())
            rams = pg.ramified_places(canon)
            g = pg.genus(canon)
            assert g == -2 + sum((rp.m + 1) * rp.degree() for rp in rams)
            basis = ib.as_integral_basis(a)
            disc = ib.basis_discriminant(basis)
            assert disc.is_polynomial()
            finite = {str(rp.place): rp for rp in rams if not rp.place.is_infinite}
            assert {str(f) for f, _ in disc.num.factor()} == set(finite)
            for f, _ in disc.num.factor():
                assert poly_valuation(disc.num, f) == finite[str(f)].diff_exponent
            # action sigma(y) = y + 1 in the quotient ring
            ring = ro.CubicRing.artin_schreier(a)
            s = ring.y + ring.one
            assert (s * s * s - s - ring.from_ratfunc(a)).is_zero()
            # Dedekind-style oracle: {1, y, y^2} is locally maximal away
            # from the poles (disc(X^3 - X - abar) is a unit in char 3)
            from cubicff.polyrat import residue

            for pl in irreducible_places(Fq, 1):
                if pl.is_infinite or valuation(a, pl) < 0:
                    continue
                st = pg.splitting_type(canon, pl)
                abar = residue(a, pl)
                K = abar.field
                cubic = FqPoly(K, [K.neg(abar.code), K.neg(K.one), 0, K.one])
                degs = sorted(f.degree for f, e2 in cubic.factor() for _ in range(e2))
                expect = pg.TOTALLY_SPLIT if degs == [1, 1, 1] else pg.INERT
                assert st == expect
            as_checked += 1
    for q in (4, 7):
        Fq = F(q)
        rng = random.Random(7100 + q)
        for _ in range(25):
            a = rand_kummer_standard(Fq, rng)
            canon = nf.CanonicalCubic(nf.PURELY_CUBIC, a, ())
            rams = pg.ramified_places(canon)
            g = pg.genus(canon)
            assert g == -2 + sum(rp.degree() for rp in rams)
            basis = ib.kummer_integral_basis(a)
            disc = ib.basis_discriminant(basis)
            assert disc.is_polynomial()
            finite = {str(rp.place) for rp in rams if not rp.place.is_infinite}
            assert {str(f) for f, _ in disc.num.factor()} == finite
            for f, _ in disc.num.factor():
                assert poly_valuation(disc.num, f) == 2
            # action sigma(y) = xi * y
            xi = next(c for c in range(2, Fq.q) if Fq.pow_(c, 3) == 1 and c != Fq.one)
            ring = ro.CubicRing.pure(a)
            s = ring.y * RatFunc.const(Fq, xi)
            assert (s * s * s - ring.from_ratfunc(a)).is_zero()
            assert not (s - ring.y).is_zero()
            # residue oracle agreement at degree-1 unramified places
            from cubicff.polyrat import residue

            for pl in irreducible_places(Fq, 1):
                if pl.is_infinite or valuation(a, pl) != 0:
                    continue
                st = pg.splitting_type(canon, pl)
                abar = residue(a, pl)
                K = abar.field
                cubic = FqPoly(K, [K.neg(abar.code), 0, 0, K.one])
                degs = sorted(f.degree for f, e2 in cubic.factor() for _ in range(e2))
                expect = pg.TOTALLY_SPLIT if degs == [1, 1, 1] else pg.INERT
                assert st == expect
            kummer_checked += 1
    assert as_checked >= 50 and kummer_checked >= 50
    report(8, f"{as_checked} Artin-Schreier and {kummer_checked} Kummer parameters pass all suites")


def test_criterion_09_purely_cubic_witnesses():
    yes_odd = 0
    for q in (5, 7, 11):
        Fq = F(q)
        rng = random.Random(8000 + q)
        per_field = 0
        while per_field < 17:
            s = rand_ratfunc(Fq, rng, rng.randrange(3), rng.randrange(3), nonzero=True)
            a = (s * s + 4) / (2 * s)
            if a.is_zero() or (a * a - 4).is_zero():
                continue
            wit = nf.purely_cubic_test(a)
            assert wit is not None
            ring = ro.CubicRing.standard(a)
            assert (wit.u_elem(ring) ** 3 - ring.from_ratfunc(wit.b)).is_zero()
            per_field += 1
            yes_odd += 1
    yes_two = 0
    for q in (2, 8):
        Fq = F(q)
        rng = random.Random(8100 + q)
        per_field = 0
        while per_field < 10:
            W, Z = rand_coprime_pair(Fq, rng, 2)
            den = W * (Z + W)
            if den.is_zero() or Z.is_zero():
                continue
            a = RatFunc(Z * Z, den)
            if a.is_zero() or (a * a - 4).is_zero() or a.is_constant():
                continue
            wit = nf.purely_cubic_test(a)
            assert wit is not None
            ring = ro.CubicRing.standard(a)
            assert (wit.u_elem(ring) ** 3 - ring.from_ratfunc(wit.b)).is_zero()
            per_field += 1
            yes_two += 1
    none_count = 0
    for q in (5, 11):
        Fq = F(q)
        rng = random.Random(8200 + q)
        per_field = 0
        while per_field < 25:
            a = rand_ratfunc(Fq, rng, rng.randrange(3), rng.randrange(3), nonzero=True)
            if a.is_zero() or (a * a - 4).is_zero():
                continue
            if (a * a - 4).is_square():
                continue
            assert nf.purely_cubic_test(a) is None
            per_field += 1
            none_count += 1
    assert yes_odd >= 50 and yes_two >= 20 and none_count >= 50
    report(
        9,
        f"{yes_odd} odd + {yes_two} char-2 witnesses satisfy u^3 = b; "
        f"{none_count} non-squares return none",
    )


def test_criterion_10_normalization_witness():
    replayed = 0
    for q in (2, 3, 4, 5, 7, 8, 9, 11):
        Fq = F(q)
        rng = random.Random(9000 + q)
        per_field = 0
        while per_field < 25:
            e = rand_ratfunc(Fq, rng, rng.randrange(2), rng.randrange(2))
            fc = rand_ratfunc(Fq, rng, rng.randrange(2), rng.randrange(2))
            g = rand_ratfunc(Fq, rng, rng.randrange(2), rng.randrange(2), nonzero=True)
            inp = nf.CubicInput(e, fc, g)
            try:
                canon = nf.normalize(inp)
            except (ReducibleInput, ZeroConstantTerm):
                continue
            if canon.kind == nf.INSEPARABLE:
                # no substitution chain: the canonical polynomial is the input
                assert e.is_zero() and fc.is_zero()
                per_field += 1
                replayed += 1
                continue
            w = nf.replay_chain(inp, canon.chain)
            ce, cf, cg = canon.polynomial_coeffs()
            val = w * w * w + (w * w) * ce + w * cf + w.ring.from_ratfunc(cg)
            assert val.is_zero()
            per_field += 1
            replayed += 1
    assert replayed >= 200
    report(10, f"{replayed} substitution chains replay to canonical roots")
