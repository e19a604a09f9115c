"""Ramification, genus, generator valuations and place splitting for the
three cubic families, plus the residue-algebra fallback oracle."""

from __future__ import annotations

from dataclasses import dataclass

from . import galoiskit as gk
from . import intbasis as ib
from . import normalform as nf
from .errors import (
    BasisUnavailable,
    ConstantExtension,
    HypothesisFailed,
    NotGalois,
    NotStandardForm,
)
from .gfq import FqElem, embed_field, fq_trace_to_F2, make_field
from .polyrat import FqPoly, Place, RatFunc, residue_field, valuation

RAMIFIED = "ramified"
INERT = "inert"
TOTALLY_SPLIT = "totally_split"


@dataclass(frozen=True)
class RamifiedPlace:
    place: Place
    diff_exponent: int
    m: int = None  # Artin-Schreier jump, when applicable

    def degree(self):
        return self.place.degree


def _require_galois(canon: nf.CanonicalCubic):
    galois, _ = gk.is_galois(canon)
    if not galois:
        raise NotGalois("place-level structure is computed for Galois extensions")


def _require_geometric(canon: nf.CanonicalCubic):
    if gk.is_constant_extension(canon):
        raise ConstantExtension("the extension only enlarges the constant field")


def ramified_places(canon: nf.CanonicalCubic) -> list:
    """The ramified places with their differential exponents.

    StandardForm: finite places with v < 0 and v not divisible by 3, each
    with exponent 2 (the infinite place never ramifies).  Kummer: every
    place with (v, 3) = 1 including infinity, exponent 2.  Artin-Schreier:
    the poles of the standardized parameter, exponent 2(m+1).
    """
    _require_galois(canon)
    _require_geometric(canon)
    a = canon.param
    F = canon.field
    out = []
    if canon.kind == nf.STANDARD:
        split = ib.cube_split(a)
        beta = split.beta1 * split.beta2
        for fpoly, _ in beta.factor():
            out.append(RamifiedPlace(Place(fpoly), 2))
    elif canon.kind == nf.ARTIN_SCHREIER:
        for fpoly, lam in a.den.factor():
            if lam % 3 == 0:
                raise NotStandardForm("parameter must be in Hasse standard form")
            out.append(RamifiedPlace(Place(fpoly), 2 * (lam + 1), lam))
        v_inf = valuation(a, Place.infinity())
        if v_inf < 0:
            m = -v_inf
            if m % 3 == 0:
                raise NotStandardForm("pole order at infinity must be coprime to 3")
            out.append(RamifiedPlace(Place.infinity(), 2 * (m + 1), m))
    elif canon.kind == nf.PURELY_CUBIC and F.q % 3 == 1:
        if not a.is_polynomial():
            raise NotStandardForm("Kummer parameter must be standardized")
        for fpoly, lam in a.num.factor():
            if lam % 3 == 0:
                raise NotStandardForm("Kummer exponents must be 1 or 2")
            out.append(RamifiedPlace(Place(fpoly), 2))
        if a.num.degree % 3 != 0:
            out.append(RamifiedPlace(Place.infinity(), 2))
    else:
        raise NotGalois("no ramification theory for this variant")
    out.sort(key=lambda rp: (rp.place.is_infinite, rp.place.poly.key() if rp.place.poly else ()))
    return out


def genus(canon: nf.CanonicalCubic) -> int:
    """The genus of the function field, from the family formula, cross
    checked against Riemann-Hurwitz with the computed different."""
    ramified = ramified_places(canon)
    a = canon.param
    if canon.kind == nf.STANDARD:
        g = -2 + sum(rp.degree() for rp in ramified)
    elif canon.kind == nf.ARTIN_SCHREIER:
        if a.is_constant():
            raise HypothesisFailed("need a place with positive valuation")
        g = -2 + sum((rp.m + 1) * rp.degree() for rp in ramified)
    else:  # Kummer
        if a.is_constant():
            raise HypothesisFailed("need a place with positive valuation")
        g = -2 + sum(rp.degree() for rp in ramified)
    g_rh = 1 + 3 * (0 - 1) + sum(rp.diff_exponent * rp.degree() for rp in ramified) // 2
    assert g == g_rh, "family formula must agree with Riemann-Hurwitz"
    assert g >= 0, "genus must be nonnegative"
    return g


@dataclass(frozen=True)
class GeneratorValuations:
    """Valuations of the standard generator y at the places above p."""

    case: int
    values: tuple  # one entry per place above, descending
    e: int
    f: int
    r: int


def generator_valuations(a: RatFunc, place: Place) -> GeneratorValuations:
    """The five-case description of v(y) above a place for the Galois
    standard form y^3 - 3y - a."""
    canon = nf.CanonicalCubic(nf.STANDARD, a, ())
    _require_galois(canon)
    split = ib.cube_split(a)
    v = valuation(a, place)
    if place.is_infinite:
        assert v >= 0, "the infinite place has nonnegative parameter valuation"
        if v > 0:
            return GeneratorValuations(case=4, values=(v, 0, 0), e=1, f=1, r=3)
        st = splitting_type(canon, place)
        r = 3 if st == TOTALLY_SPLIT else 1
        return GeneratorValuations(case=4, values=(0,) * r, e=1, f=3 // r, r=r)
    fpoly = place.poly
    in_beta = (split.beta1 * split.beta2 % fpoly).is_zero()
    if in_beta:
        return GeneratorValuations(case=1, values=(v,), e=3, f=1, r=1)
    if (split.gamma % fpoly).is_zero():
        st = splitting_type(canon, place)
        r = 3 if st == TOTALLY_SPLIT else 1
        from .polyrat import poly_valuation

        vg = poly_valuation(split.gamma, fpoly)
        return GeneratorValuations(case=2, values=(-vg,) * r, e=1, f=3 // r, r=r)
    if (split.alpha % fpoly).is_zero():
        return GeneratorValuations(case=3, values=(v, 0, 0), e=1, f=1, r=3)
    st = splitting_type(canon, place)
    r = 3 if st == TOTALLY_SPLIT else 1
    return GeneratorValuations(case=5, values=(0,) * r, e=1, f=3 // r, r=r)


# -- splitting ------------------------------------------------------------------------


def _is_cube_in(K, code):
    if code == 0 or K.q % 3 != 1:
        return True
    return K.pow_(code, (K.q - 1) // 3) == 1


def _sqrt_in(K, code):
    from .gfq import fq_sqrt

    r = fq_sqrt(FqElem(K, code))
    return None if r is None else r.code


def _constant_split(place: Place) -> str:
    # L = F_{q^3}(x): residue degree grows by 3/gcd(3, deg)
    return TOTALLY_SPLIT if place.degree % 3 == 0 else INERT


def _infinite_residue(a: RatFunc):
    """The value of a at the infinite place (v_inf(a) = 0 required)."""
    F = a.field
    return F.div(a.num.lc(), a.den.lc())


def splitting_type(canon: nf.CanonicalCubic, place: Place) -> str:
    """Ramified / inert / totally split classification of a place.

    StandardForm places follow the explicit residue criteria; the
    Artin-Schreier / Kummer variants use the residue-algebra fallback at
    finite unramified places and classical reduction at infinity.
    """
    _require_galois(canon)
    a = canon.param
    F = canon.field
    if gk.is_constant_extension(canon):
        return _constant_split(place)
    ram = {(rp.place) for rp in ramified_places(canon)}
    if place in ram:
        return RAMIFIED

    if canon.kind == nf.STANDARD:
        return _standard_split_unramified(canon, a, F, place)

    # Artin-Schreier / Kummer: fallback oracle at finite places
    if not place.is_infinite:
        basis = (
            ib.as_integral_basis(a)
            if canon.kind == nf.ARTIN_SCHREIER
            else ib.kummer_integral_basis(a)
        )
        return split_via_order(canon, basis, place)
    # infinity, unramified
    v = valuation(a, place)
    if canon.kind == nf.ARTIN_SCHREIER:
        if v > 0:
            return TOTALLY_SPLIT
        abar = _infinite_residue(a)
        has_root = any(F.sub(F.pow_(t, 3), t) == abar for t in range(F.q))
        return TOTALLY_SPLIT if has_root else INERT
    # Kummer at infinity: v = -deg(a) with 3 | deg; y/x^(deg/3) reduces to X^3 = lc(a)
    lead = a.num.lc()
    from .gfq import fq_is_cube

    return TOTALLY_SPLIT if fq_is_cube(FqElem(F, lead)) else INERT


def _standard_split_unramified(canon, a, F, place: Place) -> str:
    v = valuation(a, place)
    if v > 0:
        return TOTALLY_SPLIT
    if place.is_infinite:
        # v = 0 here (negative is impossible for Galois standard forms)
        abar = _infinite_residue(a)
        return _split_by_reduced_value(canon, F, F, abar, place)
    rf = residue_field(F, place)
    K = rf.field
    if v < 0:
        assert v % 3 == 0, "ramification would have caught non-multiples of 3"
        m = -v // 3
        g = a * RatFunc(place.poly) ** (3 * m)
        gbar = rf.reduce(g).code
        assert K.q % 3 == 1, "denominator places have even degree"
        return TOTALLY_SPLIT if _is_cube_in(K, gbar) else INERT
    abar = rf.reduce(a).code
    return _split_by_reduced_value(canon, F, K, abar, place)


def _split_by_reduced_value(canon, F, K, abar, place: Place) -> str:
    """Thm-style classification at v(a) = 0 from the reduced parameter."""
    if F.p != 2:
        a2_4 = K.sub(K.mul(abar, abar), 4 % K.p)
        if a2_4 == 0:
            # reduced discriminant vanishes; the closed criteria degenerate
            return _order_fallback(canon, place)
        if K.q % 3 == 1:
            delta = _sqrt_in(K, a2_4)
            assert delta is not None, "square discriminant reduces to a square"
            val = K.mul(K.add(abar, delta), K.inv(2 % K.p))
            return INERT if not _is_cube_in(K, val) else TOTALLY_SPLIT
        if K.q == 5 and abar in (1 % K.p, K.neg(1)):
            return INERT
        return TOTALLY_SPLIT
    # p = 2
    n2 = K.n  # K is an F_2 extension of degree n2
    ainv2 = K.inv(K.mul(abar, abar))
    tr_val = fq_trace_to_F2(FqElem(K, ainv2))
    tr_one = fq_trace_to_F2(FqElem(K, K.one))
    if tr_val != tr_one:
        return TOTALLY_SPLIT
    if K.q % 3 == 1:
        root = _char2_quad_root(K, abar)
        return INERT if not _is_cube_in(K, root) else TOTALLY_SPLIT
    K2 = make_field(2, 2 * n2)
    emb = embed_field(K, K2)
    root = _char2_quad_root(K2, emb(abar))
    return INERT if not _is_cube_in(K2, root) else TOTALLY_SPLIT


def _char2_quad_root(K, abar):
    """A root of T^2 + abar*T + 1 in K (exists under the trace condition)."""
    for t in range(K.q):
        if K.add(K.add(K.mul(t, t), K.mul(abar, t)), K.one) == 0:
            return t
    raise AssertionError("trace condition guarantees a root")


def _order_fallback(canon, place: Place) -> str:
    a = canon.param
    if place.is_infinite:
        # move the infinite place to the finite place (x) via x -> 1/x
        from .polyrat import ratfunc_substitute_inverse

        assert canon.kind == nf.STANDARD
        a_inv = ratfunc_substitute_inverse(a)
        canon_inv = nf.CanonicalCubic(nf.STANDARD, a_inv, ())
        basis = ib.standard_integral_basis(a_inv)
        return split_via_order(canon_inv, basis, Place(FqPoly.x(canon.field)))
    if canon.kind == nf.STANDARD:
        basis = ib.standard_integral_basis(a)
    elif canon.kind == nf.ARTIN_SCHREIER:
        basis = ib.as_integral_basis(a)
    else:
        basis = ib.kummer_integral_basis(a)
    return split_via_order(canon, basis, place)


def split_via_order(canon: nf.CanonicalCubic, basis: ib.IntegralBasis, place: Place) -> str:
    """Decompose the residue algebra O_L/p O_L built from the integral
    basis: a degenerate trace form means ramification; otherwise the
    dimension of the Frobenius fixed space counts the places above."""
    if place.is_infinite:
        if canon.kind == nf.STANDARD:
            F = canon.field
            return _standard_split_unramified(canon, canon.param, F, place)
        raise BasisUnavailable("the order-based oracle covers finite places only")
    F = canon.field
    rf = residue_field(F, place)
    K = rf.field
    els = basis.elements
    # structure constants in F_q[x]
    M = [[els[j].coords[i] for j in range(3)] for i in range(3)]
    from .ringops import matinv3, matvec3

    Minv = matinv3(M)
    table = []
    for i in range(3):
        row = []
        for j in range(3):
            prod = els[i] * els[j]
            coords = matvec3(Minv, list(prod.coords))
            consts = []
            for c in coords:
                assert c.is_polynomial(), "structure constants of an order are integral"
                consts.append(rf.reduce_poly(c.num))
            row.append(consts)
        table.append(row)

    def amul(u, v):
        out = [0, 0, 0]
        for i in range(3):
            if u[i] == 0:
                continue
            for j in range(3):
                if v[j] == 0:
                    continue
                c = K.mul(u[i], v[j])
                tij = table[i][j]
                for k in range(3):
                    if tij[k]:
                        out[k] = K.add(out[k], K.mul(c, tij[k]))
        return out

    def atrace(u):
        # trace of multiplication-by-u
        tr = 0
        for i in range(3):
            col = [0, 0, 0]
            col[i] = K.one
            prod = amul(u, col)
            tr = K.add(tr, prod[i])
        return tr

    basis_vecs = [[K.one, 0, 0], [0, K.one, 0], [0, 0, K.one]]
    gram = [[atrace(amul(bi, bj)) for bj in basis_vecs] for bi in basis_vecs]
    det = _det3_field(K, gram)
    if det == 0:
        return RAMIFIED
    # etale: r = dim of the fixed space of the residue Frobenius
    def apow(u, e):
        result = [K.one, 0, 0]
        base = u
        while e:
            if e & 1:
                result = amul(result, base)
            base = amul(base, base)
            e >>= 1
        return result

    frob_cols = []
    for bv in basis_vecs:
        frob_cols.append(apow(bv, K.q))
    # rows of (Frob - id) as a 3x3 over K
    mat = [[K.sub(frob_cols[j][i], basis_vecs[j][i]) for j in range(3)] for i in range(3)]
    r = 3 - _rank3_field(K, mat)
    assert r in (1, 3), "a Galois cubic splits with r = 1 or r = 3"
    return TOTALLY_SPLIT if r == 3 else INERT


def _det3_field(K, m):
    return K.sub(
        K.add(
            K.add(
                K.mul(m[0][0], K.sub(K.mul(m[1][1], m[2][2]), K.mul(m[1][2], m[2][1]))),
                K.mul(m[0][2], K.sub(K.mul(m[1][0], m[2][1]), K.mul(m[1][1], m[2][0]))),
            ),
            0,
        ),
        K.mul(m[0][1], K.sub(K.mul(m[1][0], m[2][2]), K.mul(m[1][2], m[2][0]))),
    )


def _rank3_field(K, mat):
    m = [row[:] for row in mat]
    rank = 0
    for col in range(3):
        piv = next((r for r in range(rank, 3) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = K.inv(m[rank][col])
        m[rank] = [K.mul(v, inv) for v in m[rank]]
        for r in range(3):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [K.sub(v, K.mul(f, w)) for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank
