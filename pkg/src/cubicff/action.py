"""Explicit Galois action on the standard-form generator, generator
equivalence and transformation, and the classical Artin-Schreier / Kummer
generator equivalences.

All identities are verified in the exact quotient ring
F_q(x)[z]/(z^3 - 3z - a); nothing is checked numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import galoiskit as gk
from . import normalform as nf
from . import ringops
from .gfq import quad_ext
from .errors import (
    DegenerateA,
    MixedFields,
    NotGalois,
    NotOnConic,
    WrongCharacteristic,
    WrongResidue,
)
from .polyrat import FqPoly, RatFunc, ratfunc_cube_root, ratfunc_sqrt
from .ringops import CubicRing, RingElem as QuotientRingElem  # re-exported verification backbone

__all__ = [
    "ActionDescriptor",
    "ConicPoint",
    "CubicRing",
    "QuotientRingElem",
    "galois_action",
    "transform_generator",
    "same_field_standard",
    "as_same_field",
    "kummer_same_field",
    "conic_point_from_pair",
    "appendix_conic_point",
]


@dataclass(frozen=True)
class ActionDescriptor:
    """sigma(z) = c2 z^2 + c1 z + c0 for a generator sigma of the Galois
    group; f is the chosen root of the auxiliary quadratic, and the other
    automorphism is sigma^2(z) = -c2 z^2 + (-1 - f) z - c0."""

    c2: RatFunc
    c1: RatFunc
    c0: RatFunc
    f: RatFunc

    def sigma(self, ring: CubicRing) -> QuotientRingElem:
        return ring.y.eval_quadratic(self.c2, self.c1, self.c0)

    def sigma2(self, ring: CubicRing) -> QuotientRingElem:
        return ring.y.eval_quadratic(-self.c2, -(1 + self.f), -self.c0)

    def apply(self, ring: CubicRing, elem: QuotientRingElem) -> QuotientRingElem:
        """sigma extended F_q(x)-linearly to the whole field."""
        s = self.sigma(ring)
        c0, c1, c2 = elem.coords
        return (s * s) * c2 + s * c1 + ring.elem(c0)

    def matrix(self, ring: CubicRing):
        """Matrix of sigma on the basis (1, z, z^2); column j holds the
        coordinates of sigma(z^j)."""
        s = self.sigma(ring)
        cols = [ring.one, s, s * s]
        return [[cols[j].coords[i] for j in range(3)] for i in range(3)]


@dataclass(frozen=True)
class ConicPoint:
    """(phi, chi) with chi^2 + a*phi*chi + phi^2 = 1 for the reference
    parameter a; z2 = phi z1^2 + chi z1 - 2 phi."""

    phi: RatFunc
    chi: RatFunc

    def on_conic(self, a: RatFunc) -> bool:
        return (self.chi**2 + a * self.phi * self.chi + self.phi**2).is_one()


def _require_galois_standard(a: RatFunc):
    F = a.field
    if F.q % 3 != 2:
        raise WrongResidue("standard-form theory applies for q = -1 mod 3")
    if a.is_zero() or (a * a - 4).is_zero():
        raise DegenerateA("the action needs a != 0 and a^2 != 4")
    galois, _ = gk.is_galois(nf.CanonicalCubic(nf.STANDARD, a, ()))
    if not galois:
        raise NotGalois("X^3 - 3X - a is not Galois")


def galois_action(a: RatFunc) -> ActionDescriptor:
    """The generator action sigma(z) = -((1+2f)/a) z^2 + f z + 2(1+2f)/a,
    where f is the canonical root of (1 - 4/a^2)(X^2 + X) + (1 - 1/a^2).

    p odd: f = (-3(a^2-4) + a*delta)/(6(a^2-4)) for the canonical square
    root delta of -27(a^2-4); p = 2: a*f is the canonical root of the
    resolvent X^2 + aX + (1+a^2)."""
    _require_galois_standard(a)
    F = a.field
    if F.p == 2:
        f = nf.solve_as_quadratic((1 + a * a) / (a * a))
        assert f is not None, "Galois parameter must split the resolvent"
    else:
        disc = RatFunc.from_int(F, -27) * (a * a - 4)
        delta = ratfunc_sqrt(disc)
        assert delta is not None, "Galois parameter must have square discriminant"
        f = (RatFunc.from_int(F, -3) * (a * a - 4) + a * delta) / (
            RatFunc.from_int(F, 6) * (a * a - 4)
        )
    c2 = -((1 + 2 * f) / a)
    c0 = -(2 * c2)
    return ActionDescriptor(c2=c2, c1=f, c0=c0, f=f)


@dataclass(frozen=True)
class GeneratorTransform:
    a2: RatFunc
    forward: list  # base change from (1, z1, z1^2) to (1, z2, z2^2)
    inverse: list


def _a2_from_point(a1: RatFunc, pt: ConicPoint) -> RatFunc:
    phi, chi = pt.phi, pt.chi
    return (
        (a1 * a1 - 2) * phi**3
        + 3 * a1 * phi**2 * chi
        + 6 * phi * chi**2
        + a1 * chi**3
    )


def transform_generator(a1: RatFunc, pt: ConicPoint) -> GeneratorTransform:
    """z2 = phi z1^2 + chi z1 - 2 phi and the parameter a2 it satisfies,
    with the 3x3 base-change matrix and its inverse."""
    if not pt.on_conic(a1):
        raise NotOnConic(f"({pt.phi}, {pt.chi}) is not on the conic of {a1}")
    F = a1.field
    phi, chi = pt.phi, pt.chi
    a2 = _a2_from_point(a1, pt)
    ring = CubicRing.standard(a1)
    z2 = ring.y.eval_quadratic(phi, chi, -2 * phi)
    check = z2 * z2 * z2 - z2 * RatFunc.from_int(F, 3) - ring.from_ratfunc(a2)
    assert check.is_zero(), "transformed generator must satisfy X^3 - 3X - a2"
    zero, one = RatFunc.zero(F), RatFunc.one(F)
    forward = [
        [one, zero, zero],
        [-2 * phi, chi, phi],
        [2 * phi * chi * a1 + 4 * phi**2, phi**2 * a1 + 2 * phi * chi, chi**2 - phi**2],
    ]
    inverse = ringops.matinv3(forward)
    return GeneratorTransform(a2=a2, forward=forward, inverse=inverse)


# -- solving for equivalence ---------------------------------------------------------


def _lift_ratfunc(r: RatFunc, ext) -> RatFunc:
    return RatFunc(
        r.num.map_coeffs(ext.from_base, ext),
        r.den.map_coeffs(ext.from_base, ext),
        normalized=True,
    )


def _descend_ratfunc(r: RatFunc, ext):
    """Map back to the base field when every coefficient lies there."""
    base = ext.base

    def down(poly):
        out = []
        for c in poly.coeffs:
            a, b = ext.split(c)
            if b != 0:
                return None
            out.append(a)
        return FqPoly(base, out)

    num, den = down(r.num), down(r.den)
    if num is None or den is None:
        return None
    return RatFunc(num, den, normalized=True)


def _primitive_cube_root(ext):
    if ext.kind == "CubeRootUnity":
        return ext.gen()
    # xi = (-1 + 3t)/2 with t^2 = -3^{-1}
    B = ext.base
    half = B.inv(2 % B.p)
    return ext.pair(B.neg(half), B.mul(3 % B.p, half))


def _pure_cubic_data(a_ext: RatFunc, ext):
    """(k, b) over F_{q^2}(x) with u = y^2 + ky - 2 satisfying u^3 = b in
    the lifted ring; exists because -3 is a square in F_{q^2}."""
    if ext.p == 2:
        w = nf.solve_as_quadratic((a_ext * a_ext).inverse())
        assert w is not None, "Galois lift must split X^2 - X = 1/a^2"
        return a_ext * w, a_ext**4 * w
    delta = ratfunc_sqrt(a_ext * a_ext - 4)
    assert delta is not None, "a^2 - 4 is a square over F_{q^2}(x) in the Galois case"
    k = (delta - a_ext) / 2
    return k, (a_ext * a_ext - 4) * (a_ext * k + 2)


def same_field_standard(a1: RatFunc, a2: RatFunc):
    """A conic point transforming the generator of X^3-3X-a1 into one of
    X^3-3X-a2, when both define the same field; None otherwise.

    Method: over F_{q^2}(x) both extensions are purely cubic with explicit
    Kummer parameters b_i (cube identities of the purely-cubic witnesses);
    they coincide as fields iff b2 = b1^j c^3, solved by factorization.
    The resulting generator is mapped back through u = y^2 + ky - 2 and
    accepted when its coordinates descend to F_q(x)."""
    if a1.field != a2.field:
        raise MixedFields("parameters over different constant fields")
    _require_galois_standard(a1)
    _require_galois_standard(a2)
    F = a1.field
    one = RatFunc.one(F)
    for pt in (ConicPoint(RatFunc.zero(F), one), ConicPoint(RatFunc.zero(F), -one)):
        if pt.on_conic(a1) and _a2_from_point(a1, pt) == a2:
            return pt

    ext = quad_ext(F)
    a1e = _lift_ratfunc(a1, ext)
    a2e = _lift_ratfunc(a2, ext)
    k1, b1 = _pure_cubic_data(a1e, ext)
    k2, b2 = _pure_cubic_data(a2e, ext)
    ring = CubicRing.standard(a1e)
    u1 = ring.y * ring.y + ring.y * k1 + ring.from_ratfunc(RatFunc.from_int(ext, -2))
    xi = _primitive_cube_root(ext)
    det2 = a2e + 3 * k2 - k2**3
    assert not det2.is_zero()
    det2_inv = det2.inverse()
    const2 = 2 * k2 * a2e + 2 * k2 * k2 + 2
    lin2 = k2 * k2 - 1
    for j in (1, 2):
        c = ratfunc_cube_root(b2 / b1**j)
        if c is None:
            continue
        u2 = (u1**j) * c
        for _ in range(3):
            # y2 = (u2^2 - (k2^2-1) u2 - (2k2a2 + 2k2^2 + 2)) / det2
            z2 = (u2 * u2 - u2 * lin2 - ring.from_ratfunc(const2)) * det2_inv
            c0, c1, c2 = z2.coords
            phi = _descend_ratfunc(c2, ext)
            chi = _descend_ratfunc(c1, ext)
            if phi is not None and chi is not None:
                pt = ConicPoint(phi, chi)
                if pt.on_conic(a1) and _a2_from_point(a1, pt) == a2:
                    return pt
            u2 = u2 * RatFunc(FqPoly.const(ext, xi))
    return None


def conic_point_from_pair(a1: RatFunc, c: RatFunc, d: RatFunc):
    """The norm-one point z^2/N(z) for z = c + dT in F_q(x)[T]/(T^2 - a1 T + 1):
    chi = (c^2 - d^2)/N, phi = (2cd + a1 d^2)/N with N = c^2 + a1 c d + d^2.
    None when N = 0 (z is a zero divisor)."""
    N = c * c + a1 * c * d + d * d
    if N.is_zero():
        return None
    chi = (c * c - d * d) / N
    phi = (2 * c * d + a1 * d * d) / N
    pt = ConicPoint(phi, chi)
    return pt if pt.on_conic(a1) else None


def appendix_conic_point(a1: RatFunc, C: FqPoly, D: FqPoly, sign=+1):
    """The closed-form conic point attached to a coprime polynomial pair
    (C, D) for p odd:

        phi = 12 C D Q1 / (delta (D^2 + 3^{-1} C^2)),
        chi = (-6 P1 C D +- delta (C^2 - 3^{-1} D^2)) / (delta (D^2 + 3^{-1} C^2)),

    with delta^2 = Q1^2 * (-27)(a1^2 - 4) and a1 = P1/Q1.  Returns None when
    a denominator vanishes; used as a generator of sample points and as a
    cross-check oracle."""
    F = a1.field
    if F.p == 2:
        raise WrongCharacteristic("the closed-form parametrization is for p odd")
    P1, Q1 = a1.num, a1.den
    delta_sq = RatFunc(FqPoly.const(F, (-27) % F.p)) * (RatFunc(P1) ** 2 - 4 * RatFunc(Q1) ** 2)
    delta = ratfunc_sqrt(delta_sq)
    if delta is None:
        raise NotGalois("delta^2 = Q1^2 d is a square only in the Galois case")
    Crf, Drf = RatFunc(C), RatFunc(D)
    third = RatFunc.from_int(F, 3).inverse()
    denom = delta * (Drf * Drf + third * Crf * Crf)
    if denom.is_zero():
        return None
    phi = 12 * Crf * Drf * RatFunc(Q1) / denom
    chi = (-6 * RatFunc(P1) * Crf * Drf + sign * delta * (Crf * Crf - third * Drf * Drf)) / denom
    pt = ConicPoint(phi, chi)
    return pt if pt.on_conic(a1) else None


# -- classical equivalences ------------------------------------------------------------


def as_same_field(a1: RatFunc, a2: RatFunc):
    """(j, b) with a1 = j*a2 + (b^3 - b), j in {1, 2}, for Artin-Schreier
    parameters in characteristic 3; None if the fields differ."""
    F = a1.field
    if F.p != 3:
        raise WrongCharacteristic("Artin-Schreier equivalence needs p = 3")
    for j in (1, 2):
        d = a1 - RatFunc.from_int(F, j) * a2
        c, w = nf.as_reduce_poles(d)
        if not c.is_constant():
            continue
        w0 = nf.constant_as_root(F, c.constant_code())
        if w0 is None:
            continue
        b = w + RatFunc.const(F, w0)
        assert a1 == RatFunc.from_int(F, j) * a2 + (b**3 - b)
        return j, b
    return None


def kummer_same_field(a1: RatFunc, a2: RatFunc):
    """(j, c) with a1 = a2^j * c^3, j in {1, 2}, for Kummer parameters over
    q = 1 mod 3; None if the fields differ."""
    F = a1.field
    if F.q % 3 != 1:
        raise WrongResidue("Kummer equivalence needs q = 1 mod 3")
    for j in (1, 2):
        ratio = a1 / a2**j
        c = ratfunc_cube_root(ratio)
        if c is not None:
            assert a1 == a2**j * c**3
            return j, c
    return None
