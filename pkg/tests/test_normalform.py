import random

import pytest

from cubicff import normalform as nf
from cubicff import ringops as ro
from cubicff.errors import (
    DegenerateArtinSchreier,
    ReducibleInput,
    WrongCharacteristic,
    ZeroConstantTerm,
)

from conftest import F, R, rand_ratfunc


def canonical_holds(inp: nf.CubicInput, canon: nf.CanonicalCubic) -> bool:
    """Replay the chain on a root of the input and test the canonical poly."""
    w = nf.replay_chain(inp, canon.chain)
    e, f, g = canon.polynomial_coeffs()
    val = w * w * w + (w * w) * e + w * f + w.ring.from_ratfunc(g)
    return val.is_zero()


def test_depress_examples():
    F5 = F(5)
    inp = nf.CubicInput(R(F5, "0"), R(F5, "x"), R(F5, "x+1"))
    a, b = nf.depress(inp)
    assert a == R(F5, "x") and b == R(F5, "x+1")
    inp2 = nf.CubicInput(R(F5, "3"), R(F5, "0"), R(F5, "1"))
    a2, b2 = nf.depress(inp2)
    assert a2 == R(F5, "2") and b2 == R(F5, "3")


def test_depressed_discriminant_value():
    F5 = F(5)
    d = nf.discriminant_depressed(R(F5, "0"), R(F5, "1"))
    assert d == R(F5, "-27")


def test_depress_preserves_discriminant():
    F7 = F(7)
    rng = random.Random(1)
    for _ in range(8):
        e = rand_ratfunc(F7, rng, 1, 1)
        f = rand_ratfunc(F7, rng, 1, 1)
        g = rand_ratfunc(F7, rng, 1, 1, nonzero=True)
        a, b = nf.depress(nf.CubicInput(e, f, g))
        # reference discriminant of X^3+eX^2+fX+g
        ref = (
            18 * e * f * g - 4 * e**3 * g + e * e * f * f - 4 * f**3 - 27 * g * g
        )
        assert nf.discriminant_depressed(a, b) == ref


def test_normalize_standard_example():
    F5 = F(5)
    inp = nf.CubicInput(R(F5, "1"), R(F5, "0"), R(F5, "1"))
    canon = nf.normalize(inp)
    assert canon.kind == nf.STANDARD
    assert canon.param == R(F5, "1")
    assert canonical_holds(inp, canon)


def test_normalize_purely_cubic_branch():
    F5 = F(5)
    # 3eg = f^2 with an irreducible witness: (x, x, 2x)
    inp = nf.CubicInput(R(F5, "x"), R(F5, "x"), R(F5, "2*x"))
    canon = nf.normalize(inp)
    assert canon.kind == nf.PURELY_CUBIC
    assert canonical_holds(inp, canon)


def test_normalize_rejects_reducible_and_zero_g():
    F5 = F(5)
    with pytest.raises(ZeroConstantTerm):
        nf.normalize(nf.CubicInput(R(F5, "1"), R(F5, "0"), R(F5, "0")))
    # (3,3,1) is (X+1)^3: satisfies 3eg = f^2 but is reducible
    with pytest.raises(ReducibleInput):
        nf.normalize(nf.CubicInput(R(F5, "3"), R(F5, "3"), R(F5, "1")))


def test_normalize_inseparable():
    F3 = F(3)
    canon = nf.normalize(nf.CubicInput(R(F3, "0"), R(F3, "0"), R(F3, "x")))
    assert canon.kind == nf.INSEPARABLE
    assert canon.param == R(F3, "-x")


def test_char3_to_artin_schreier_examples():
    F3 = F(3)
    conv = nf.char3_to_artin_schreier(nf.CanonicalCubic(nf.CHAR3_SEPARABLE, R(F3, "-x^2"), ()))
    assert conv.param == R(F3, "x")
    assert nf.char3_to_artin_schreier(nf.CanonicalCubic(nf.CHAR3_SEPARABLE, R(F3, "-x"), ())) is None
    conv2 = nf.char3_to_artin_schreier(nf.CanonicalCubic(nf.CHAR3_SEPARABLE, R(F3, "-1"), ()))
    assert conv2 is not None and conv2.param.is_constant()


def test_as_standardize_examples():
    F3 = F(3)
    assert nf.as_standardize(R(F3, "1/x")) == R(F3, "1/x")
    assert nf.as_standardize(R(F3, "1/x^3")) == R(F3, "1/x")
    assert nf.as_standardize(R(F3, "x^3")) == R(F3, "x")
    with pytest.raises(DegenerateArtinSchreier):
        nf.as_standardize(R(F3, "x^3-x"))


@pytest.mark.parametrize("q", [3, 9])
def test_as_standardize_properties(q):
    Fq = F(q)
    rng = random.Random(5 + q)
    from cubicff.polyrat import Place, valuation

    for _ in range(10):
        a = rand_ratfunc(Fq, rng, rng.randrange(5), rng.randrange(5), nonzero=True)
        try:
            c, w = nf.as_standardize_full(a)
        except DegenerateArtinSchreier:
            continue
        assert a - c == w**3 - w  # the correction is an Artin-Schreier image
        for fpoly, e in c.den.factor():
            assert e % 3 != 0
        v_inf = valuation(c, Place.infinity())
        if v_inf < 0:
            assert (-v_inf) % 3 != 0


def test_kummer_standardize_examples():
    F4 = F(4)
    assert nf.kummer_standardize(R(F4, "x^4")) == R(F4, "x")
    assert nf.kummer_standardize(R(F4, "x/(x+1)")) == R(F4, "x*(x+1)^2")
    assert nf.kummer_standardize(R(F4, "x")) == R(F4, "x")
    from cubicff.errors import CubeInput

    with pytest.raises(CubeInput):
        nf.kummer_standardize(R(F4, "x^3"))


@pytest.mark.parametrize("q", [4, 7])
def test_kummer_standardize_properties(q):
    Fq = F(q)
    rng = random.Random(6 + q)
    from cubicff.errors import CubeInput

    for _ in range(10):
        a = rand_ratfunc(Fq, rng, rng.randrange(1, 5), rng.randrange(4), nonzero=True)
        try:
            std, c = nf.kummer_standardize_full(a)
        except CubeInput:
            continue
        assert std == a * c**3
        assert std.is_polynomial()
        for _, e in std.num.factor():
            assert e in (1, 2)


def test_purely_cubic_witness_odd():
    F5 = F(5)
    a = R(F5, "(x^2+4)/(2*x)")
    wit = nf.purely_cubic_test(a)
    assert wit is not None
    assert wit.delta * wit.delta == a * a - 4
    ring = ro.CubicRing.standard(a)
    assert (wit.u_elem(ring) ** 3 - ring.from_ratfunc(wit.b)).is_zero()
    assert nf.purely_cubic_test(R(F5, "x")) is None  # x^2 + 1 is not a square
    assert nf.purely_cubic_test(R(F5, "1")) is None  # -3 = 2 is not a square mod 5
    with pytest.raises(ReducibleInput):
        nf.purely_cubic_test(R(F5, "2"))


def test_purely_cubic_witness_char2():
    F2 = F(2)
    a = R(F2, "x^2/(x+1)")  # Z = x, W = 1
    wit = nf.purely_cubic_test(a)
    assert wit is not None
    ring = ro.CubicRing.standard(a)
    assert (wit.u_elem(ring) ** 3 - ring.from_ratfunc(wit.b)).is_zero()
    assert nf.purely_cubic_test(R(F2, "x")) is None


def test_solve_as_quadratic_examples():
    F2 = F(2)
    assert nf.solve_as_quadratic(R(F2, "0")) == R(F2, "0")
    w = nf.solve_as_quadratic(R(F2, "x^2+x"))
    assert w is not None and w * w - w == R(F2, "x^2+x")
    w2 = nf.solve_as_quadratic(R(F2, "x^4+x^2"))
    assert w2 == R(F2, "x^2")
    assert nf.solve_as_quadratic(R(F2, "1/x^2")) is None
    with pytest.raises(WrongCharacteristic):
        nf.solve_as_quadratic(R(F(5), "x"))


@pytest.mark.parametrize("q", [2, 8])
def test_solve_as_quadratic_roundtrip(q):
    Fq = F(q)
    rng = random.Random(77 + q)
    for _ in range(10):
        w = rand_ratfunc(Fq, rng, 2, 2)
        c = w * w - w
        sol = nf.solve_as_quadratic(c)
        assert sol is not None and sol * sol - sol == c
        assert sol in (w, w + 1)


@pytest.mark.parametrize("q", [4, 7])
def test_galois_over_q1_mod3_is_purely_cubic(q):
    """A Galois cubic over q = 1 mod 3 always admits a purely cubic
    generator: shifting a Kummer generator produces a StandardForm whose
    purely_cubic_test must succeed."""
    from cubicff import galoiskit as gk
    from conftest import rand_kummer_standard

    Fq = F(q)
    rng = random.Random(160 + q)
    for _ in range(5):
        b = rand_kummer_standard(Fq, rng)
        c = rng.randrange(1, Fq.q)
        cc = R(Fq, str(c)) if Fq.n == 1 else None
        if cc is None:
            from cubicff.polyrat import RatFunc

            cc = RatFunc.const(Fq, c)
        # minimal polynomial of y + c for y^3 = b
        e = -3 * cc
        f = 3 * cc * cc
        g = -(cc**3) - b
        inp = nf.CubicInput(e, f, g)
        try:
            canon = nf.normalize(inp)
        except ReducibleInput:
            continue
        galois, _ = gk.is_galois(canon)
        assert galois
        if canon.kind == nf.STANDARD:
            assert nf.purely_cubic_test(canon.param) is not None


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11])
def test_normalize_chain_soundness_random(q):
    """Classification partition + witness soundness across characteristics."""
    Fq = F(q)
    rng = random.Random(900 + q)
    found = 0
    while found < 6:
        e = rand_ratfunc(Fq, rng, rng.randrange(2), rng.randrange(2))
        f = rand_ratfunc(Fq, rng, rng.randrange(2), rng.randrange(2))
        g = rand_ratfunc(Fq, rng, rng.randrange(2), rng.randrange(2), nonzero=True)
        inp = nf.CubicInput(e, f, g)
        try:
            canon = nf.normalize(inp)
        except (ReducibleInput, ZeroConstantTerm):
            continue
        found += 1
        if Fq.p == 3:
            assert canon.kind in (nf.CHAR3_SEPARABLE, nf.INSEPARABLE)
        else:
            assert canon.kind in (nf.STANDARD, nf.PURELY_CUBIC)
        if canon.kind != nf.INSEPARABLE:
            assert canonical_holds(inp, canon)
