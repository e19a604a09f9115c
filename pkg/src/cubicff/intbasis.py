"""Integral bases over F_q[x] for the three cubic families, with exact
integrality and discriminant verification.

Basis elements are presented in the power basis of an integral generator
(omega = gamma*beta1*beta2*y for the standard family, y itself for the
Artin-Schreier and Kummer families) as (degree <= 2 numerator, scalar
polynomial denominator), and simultaneously as exact quotient-ring
elements used for all checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import galoiskit as gk
from . import normalform as nf
from . import ringops
from .errors import (
    NoNormWitness,
    NotGalois,
    NotStandardForm,
    WrongCharacteristic,
    WrongResidue,
    ZeroInput,
)
from .polyrat import FqPoly, RatFunc
from .ringops import CubicRing, RingElem, det3


@dataclass(frozen=True)
class CubeSplit:
    """a = alpha / (gamma^3 * beta), beta = beta1 * beta2^2 cube-free with
    beta1, beta2 squarefree and (alpha, gamma^3 beta) = 1."""

    alpha: FqPoly
    beta: FqPoly
    gamma: FqPoly
    beta1: FqPoly
    beta2: FqPoly


def cube_split(a: RatFunc) -> CubeSplit:
    if a.is_zero():
        raise ZeroInput("cube split of zero")
    F = a.field
    gamma = FqPoly.one(F)
    beta1 = FqPoly.one(F)
    beta2 = FqPoly.one(F)
    for fpoly, e in a.den.factor():
        gamma = gamma * fpoly ** (e // 3)
        r = e % 3
        if r == 1:
            beta1 = beta1 * fpoly
        elif r == 2:
            beta2 = beta2 * fpoly
    beta = beta1 * beta2 * beta2
    split = CubeSplit(alpha=a.num, beta=beta, gamma=gamma, beta1=beta1, beta2=beta2)
    assert gamma**3 * beta == a.den
    return split


@dataclass(frozen=True)
class IntegralBasis:
    """An F_q[x]-basis of the integral closure, as exact ring elements plus
    the (numerator coordinates, denominator) presentation in the power
    basis of the integral generator."""

    family: str
    ring: CubicRing  # over the canonical generator y
    generator_scale: FqPoly  # omega = scale * y
    elements: tuple  # three RingElem in the y-ring
    presentation: tuple  # ((c0, c1, c2), den) per element, in omega powers
    aux: dict

    def discriminant(self) -> RatFunc:
        return basis_discriminant(self)


def basis_discriminant(basis: IntegralBasis) -> RatFunc:
    """det of the trace form Tr(b_i b_j); equals a unit times the square of
    the product of the finite ramified places for these families."""
    els = basis.elements
    tr = [[(els[i] * els[j]).trace() for j in range(3)] for i in range(3)]
    return det3(tr)


def _check_integral(elem: RingElem):
    c0, c1, c2 = elem.charpoly()
    for c in (c0, c1, c2):
        if not c.is_polynomial():
            raise AssertionError("basis element is not integral over F_q[x]")


def _omega_presentation_to_ring(ring, scale: FqPoly, coords, den: FqPoly) -> RingElem:
    """(c0 + c1*omega + c2*omega^2)/den as a y-ring element, omega = scale*y."""
    F = den.field
    c0, c1, c2 = coords
    dinv = RatFunc(FqPoly.one(F), den)
    return ring.elem(
        RatFunc(c0) * dinv,
        RatFunc(c1 * scale) * dinv,
        RatFunc(c2 * scale * scale) * dinv,
    )


def as_integral_basis(a: RatFunc) -> IntegralBasis:
    """{1, S1 y, S2 y^2} for y^3 - y = a with a = Q / prod P_i^{lambda_i},
    (lambda_i, 3) = 1, where S_j = prod P_i^(1 + floor(j lambda_i / 3))."""
    F = a.field
    if F.p != 3:
        raise WrongCharacteristic("Artin-Schreier bases need p = 3")
    den_fac = list(a.den.factor())
    if any(lam % 3 == 0 for _, lam in den_fac):
        raise NotStandardForm("pole orders must be coprime to 3")
    one = FqPoly.one(F)
    S = {1: one, 2: one}
    for j in (1, 2):
        for fpoly, lam in den_fac:
            S[j] = S[j] * fpoly ** (1 + (j * lam) // 3)
    ring = CubicRing.artin_schreier(a)
    zero = FqPoly.zero(F)
    presentation = (
        ((one, zero, zero), one),
        ((zero, S[1], zero), one),
        ((zero, zero, S[2]), one),
    )
    elements = tuple(
        _omega_presentation_to_ring(ring, one, coords, den) for coords, den in presentation
    )
    for el in elements:
        _check_integral(el)
    basis = IntegralBasis(
        family="artin_schreier",
        ring=ring,
        generator_scale=one,
        elements=elements,
        presentation=presentation,
        aux={"S1": S[1], "S2": S[2]},
    )
    return basis


def kummer_integral_basis(a: RatFunc) -> IntegralBasis:
    """{1, y/S1, y^2/S2} for y^3 = a with a = u * prod P_i^{lambda_i},
    lambda_i in {1, 2}, where S_j = prod P_i^floor(j lambda_i / 3)."""
    F = a.field
    if F.q % 3 != 1:
        raise WrongResidue("Kummer bases need q = 1 mod 3")
    if not a.is_polynomial():
        raise NotStandardForm("Kummer standard parameter must be a polynomial")
    fac = list(a.num.factor())
    if any(lam > 2 for _, lam in fac):
        raise NotStandardForm("exponents must be 1 or 2")
    one = FqPoly.one(F)
    S = {1: one, 2: one}
    for j in (1, 2):
        for fpoly, lam in fac:
            S[j] = S[j] * fpoly ** ((j * lam) // 3)
    ring = CubicRing.pure(a)
    zero = FqPoly.zero(F)
    presentation = (
        ((one, zero, zero), one),
        ((zero, one, zero), S[1]),
        ((zero, zero, one), S[2]),
    )
    elements = tuple(
        _omega_presentation_to_ring(ring, one, coords, den) for coords, den in presentation
    )
    for el in elements:
        _check_integral(el)
    return IntegralBasis(
        family="kummer",
        ring=ring,
        generator_scale=one,
        elements=elements,
        presentation=presentation,
        aux={"S1": S[1], "S2": S[2]},
    )


def _crt(t1: FqPoly, m1: FqPoly, t2: FqPoly, m2: FqPoly) -> FqPoly:
    """x with x = t1 mod m1 and x = t2 mod m2 for coprime moduli (a unit
    modulus makes its congruence vacuous)."""
    if m1.degree <= 0:
        return t2 % m2 if m2.degree > 0 else FqPoly.zero(t1.field)
    if m2.degree <= 0:
        return t1 % m1
    g, s, t = m1.xgcd(m2)
    if g.degree != 0:
        raise NoNormWitness("CRT moduli are not coprime")
    # xgcd normalizes g to the monic constant 1, so s*m1 + t*m2 = 1 exactly
    x = t1 * t * m2 + t2 * s * m1
    return x % (m1 * m2)


def _invert_mod(u: FqPoly, m: FqPoly) -> FqPoly:
    g, s, _ = u.xgcd(m)
    if g.degree != 0:
        raise NoNormWitness("element not invertible modulo the norm modulus")
    return s.scale(u.field.inv(g.lc())) % m if m.degree > 0 else FqPoly.one(u.field)


def standard_integral_basis(a: RatFunc) -> IntegralBasis:
    """The explicit basis for the Galois standard form y^3 - 3y - a over
    q = -1 mod 3, built on omega = gamma*beta1*beta2*y.

    p odd: {1, omega + delta, (AB)^{-1} beta1^{-1} (omega^2 + theta omega + kappa)}
    with delta = 0, theta solving theta = -alpha (2 gamma^2)^{-1} beta2^{-1}
    mod (AB)^2 and theta = gamma beta1 beta2 mod beta1^2, and kappa =
    -2 (gamma beta1 beta2)^2 mod (AB)^2 beta1^2.

    p = 2: {1, omega, (omega^2 + T omega + R)/I} with T = gamma beta1 beta2
    + A beta1 H from A + B = AG + beta1 gamma^2 beta2 H, R = T^2 +
    (gamma beta1 beta2)^2 and I = beta1 A^2.
    """
    F = a.field
    if F.q % 3 != 2:
        raise WrongResidue("the standard family needs q = -1 mod 3")
    canon = nf.CanonicalCubic(nf.STANDARD, a, ())
    galois, _ = gk.is_galois(canon)
    if not galois:
        raise NotGalois("integral basis construction requires a Galois extension")
    split = cube_split(a)
    alpha, gamma, beta1, beta2 = split.alpha, split.gamma, split.beta1, split.beta2
    wit = gk.galois_norm_witness(a)
    A, B = wit.A, wit.B
    m = gamma * beta1 * beta2  # omega = m * y
    ring = CubicRing.standard(a)
    one = FqPoly.one(F)
    zero = FqPoly.zero(F)

    if F.p != 2:
        AB = A * B
        if AB.is_zero():
            raise NoNormWitness("norm witness degenerates to A*B = 0")
        M1 = AB * AB
        M2 = beta1 * beta1
        # t1 = -alpha (2 gamma^2)^{-1} beta2^{-1} mod (AB)^2
        if M1.degree > 0:
            inv = _invert_mod((gamma * gamma).scale(2 % F.p) * beta2, M1)
            t1 = (-alpha * inv) % M1
        else:
            t1 = zero
        t2 = m % M2 if M2.degree > 0 else zero
        theta = _crt(t1, M1, t2, M2)
        MM = M1 * M2
        kappa = ((m * m).scale((-2) % F.p)) % MM if MM.degree > 0 else (m * m).scale((-2) % F.p)
        den3 = AB * beta1
        presentation = (
            ((one, zero, zero), one),
            ((zero, one, zero), one),  # delta = 0
            ((kappa, theta, one), den3),
        )
        aux = {
            "alpha": alpha,
            "gamma": gamma,
            "beta1": beta1,
            "beta2": beta2,
            "A": A,
            "B": B,
            "theta": theta,
            "kappa": kappa,
            "index": den3,
        }
    else:
        Mmod = beta1 * gamma * gamma * beta2
        g, s, t = A.xgcd(Mmod)
        if g.degree != 0:
            raise NoNormWitness("A and beta1 gamma^2 beta2 must be coprime")
        target = A + B
        H = (t * target) % A if A.degree > 0 else t * target
        # G = (target - Mmod*H)/A keeps the identity exact
        G = (target - Mmod * H).exact_div(A)
        assert A * G + Mmod * H == target
        T = m + A * beta1 * H
        R = T * T + m * m
        I = beta1 * A * A
        # proof conditions
        assert ((T * T + m * m) % (beta1 * A * A)).is_zero()
        assert ((T**3 + m * m * T + alpha * beta1 * beta1 * beta2) % (beta1 * beta1 * A**4)).is_zero()
        presentation = (
            ((one, zero, zero), one),
            ((zero, one, zero), one),  # S = 0
            ((R, T, one), I),
        )
        aux = {
            "alpha": alpha,
            "gamma": gamma,
            "beta1": beta1,
            "beta2": beta2,
            "A": A,
            "B": B,
            "H": H,
            "G": G,
            "T": T,
            "R": R,
            "index": I,
        }

    elements = tuple(
        _omega_presentation_to_ring(ring, m, coords, den) for coords, den in presentation
    )
    for el in elements:
        _check_integral(el)
    basis = IntegralBasis(
        family="standard",
        ring=ring,
        generator_scale=m,
        elements=elements,
        presentation=presentation,
        aux=aux,
    )
    disc = basis_discriminant(basis)
    expected = RatFunc((beta1 * beta2) ** 2)
    ratio = disc / expected
    assert ratio.is_constant() and not ratio.is_zero(), "discriminant must be a unit times (beta1 beta2)^2"
    return basis
