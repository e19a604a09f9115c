"""Reduction of an arbitrary cubic generator to the canonical form for its
(p, q mod 3) regime, with an invertible substitution chain as witness.

Chain semantics: each step maps the current generator w to the next one,
starting from a root y of the input cubic; replaying the chain inside
F_q(x)[y]/(T_input) must land on a root of the canonical polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ringops
from .errors import (
    CubeInput,
    DegenerateArtinSchreier,
    ReducibleInput,
    WrongCharacteristic,
    WrongResidue,
    ZeroConstantTerm,
    ZeroInput,
)
from .gfq import FqElem, fq_is_cube
from .polyrat import FqPoly, RatFunc, poly_sqrt, ratfunc_sqrt, residue_field, Place

STANDARD = "StandardForm"
PURELY_CUBIC = "PurelyCubic"
ARTIN_SCHREIER = "ArtinSchreier"
CHAR3_SEPARABLE = "Char3Separable"
INSEPARABLE = "Inseparable"


@dataclass(frozen=True)
class MoebiusOnGenerator:
    c1: RatFunc
    c2: RatFunc
    c3: RatFunc
    c4: RatFunc


@dataclass(frozen=True)
class Scale:
    c: RatFunc


@dataclass(frozen=True)
class Shift:
    c: RatFunc


@dataclass(frozen=True)
class Invert:
    pass


@dataclass(frozen=True)
class CubicInput:
    """Coefficients of T(X) = X^3 + e X^2 + f X + g over F_q(x)."""

    e: RatFunc
    f: RatFunc
    g: RatFunc

    def __post_init__(self):
        if not (self.e.field == self.f.field == self.g.field):
            raise ZeroInput("cubic coefficients over different fields")

    @property
    def field(self):
        return self.e.field

    def ring(self):
        return ringops.CubicRing(self.e, self.f, self.g)


@dataclass(frozen=True)
class CanonicalCubic:
    """A classified cubic: kind tag, canonical parameter, substitution chain."""

    kind: str
    param: RatFunc
    chain: tuple = ()

    @property
    def field(self):
        return self.param.field

    def polynomial_coeffs(self):
        """Monic cubic (e, f, g) with X^3 + e X^2 + f X + g canonical."""
        F = self.param.field
        zero = RatFunc.zero(F)
        b = self.param
        if self.kind == STANDARD:
            return (zero, RatFunc.from_int(F, -3), -b)
        if self.kind == ARTIN_SCHREIER:
            return (zero, RatFunc.from_int(F, -1), -b)
        if self.kind == CHAR3_SEPARABLE:
            return (zero, b, b * b)
        return (zero, zero, -b)  # PurelyCubic and Inseparable: X^3 - b

    def ring(self):
        e, f, g = self.polynomial_coeffs()
        return ringops.CubicRing(e, f, g)


def apply_step(step, w: ringops.RingElem) -> ringops.RingElem:
    ring = w.ring
    if isinstance(step, Scale):
        return w * step.c
    if isinstance(step, Shift):
        return w + ring.from_ratfunc(step.c)
    if isinstance(step, Invert):
        return w.inverse()
    if isinstance(step, MoebiusOnGenerator):
        num = w * step.c1 + ring.from_ratfunc(step.c2)
        den = w * step.c3 + ring.from_ratfunc(step.c4)
        return num * den.inverse()
    raise TypeError(f"unknown substitution step {step!r}")


def replay_chain(inp: CubicInput, chain) -> ringops.RingElem:
    """Push a root of the input cubic through the chain, exactly."""
    w = inp.ring().y
    for step in chain:
        w = apply_step(step, w)
    return w


def depress(inp: CubicInput):
    """(a, b) with X^3 + aX + b obtained by the shift X -> X - e/3; valid
    for p != 3.  The discriminant is -4a^3 - 27b^2."""
    F = inp.field
    if F.p == 3:
        raise WrongCharacteristic("depressing the square term needs p != 3")
    e, f, g = inp.e, inp.f, inp.g
    third = RatFunc.from_int(F, 3).inverse()
    a = f - e * e * third
    b = g - e * f * third + RatFunc.from_int(F, 2) * e**3 * third**3
    return a, b


def discriminant_depressed(a: RatFunc, b: RatFunc) -> RatFunc:
    return RatFunc.from_int(a.field, -4) * a**3 - RatFunc.from_int(a.field, 27) * b**2


def normalize(inp: CubicInput) -> CanonicalCubic:
    """Classify an irreducible cubic and produce its canonical form.

    p != 3 and 3eg != f^2 -> StandardForm; p != 3 and 3eg = f^2 ->
    PurelyCubic; p = 3 separable -> Char3Separable; p = 3, e = f = 0 ->
    Inseparable.  Raises ReducibleInput when a rational root exists.

    The purely-cubic condition is 3eg = f^2 in every characteristic; in
    characteristic 2 this is literally eg = f^2 since 3 = 1 there, so the
    two phrasings in circulation coincide.
    """
    F = inp.field
    p = F.p
    e, f, g = inp.e, inp.f, inp.g
    if g.is_zero():
        raise ZeroConstantTerm("X divides the cubic")
    if ringops.cubic_has_rational_root(e, f, g):
        raise ReducibleInput("cubic has a rational root")
    one = RatFunc.one(F)

    if p == 3:
        if e.is_zero() and f.is_zero():
            return CanonicalCubic(INSEPARABLE, -g, ())
        if e.is_zero():
            # y' = 1/y, z = (g/f) y' gives z^3 + z^2 + g^2/f^3
            b1 = g * g / (f**3)
            chain = (Invert(), Scale(g / f))
        else:
            # y' = y - f/e, z = y'/e gives z^3 + z^2 + (2f^2/e^4 + g/e^3 + f^3/e^6)
            b1 = (
                RatFunc.from_int(F, 2) * f * f / e**4
                + g / e**3
                + f**3 / e**6
            )
            chain = (Shift(-(f / e)), Scale(e.inverse()))
        assert not b1.is_zero(), "irreducible input cannot reach z^3 + z^2"
        # z -> 1/z -> b1 * (1/z) gives X^3 + b1 X + b1^2
        chain = chain + (Invert(), Scale(b1))
        return CanonicalCubic(CHAR3_SEPARABLE, b1, chain)

    three = RatFunc.from_int(F, 3)
    moebius = MoebiusOnGenerator(one, RatFunc.zero(F), f / (three * g), one)
    gamma = one - e * f / (three * g) + RatFunc.from_int(F, 2) * f**3 / (RatFunc.from_int(F, 27) * g * g)
    assert not gamma.is_zero(), "gamma vanishes only at a rational root"
    if three * e * g == f * f:
        b = -(g / gamma)
        return CanonicalCubic(PURELY_CUBIC, b, (moebius,))
    alpha = e - f * f / (three * g)
    b0 = gamma * gamma * g / alpha**3
    a = RatFunc.from_int(F, -2) - RatFunc.from_int(F, 27) * b0
    chain = (moebius, Scale(gamma / alpha), Shift(three.inverse()), Scale(three))
    if (a * a - 4).is_zero():
        raise ReducibleInput("degenerate standard parameter a^2 = 4")
    return CanonicalCubic(STANDARD, a, chain)


def char3_to_artin_schreier(c: CanonicalCubic):
    """Convert X^3 + bX + b^2 to X^3 - X - a when -b is a square (the Galois
    case); None otherwise."""
    F = c.field
    if F.p != 3:
        raise WrongCharacteristic("Artin-Schreier conversion needs p = 3")
    assert c.kind == CHAR3_SEPARABLE
    b = c.param
    s = ratfunc_sqrt(-b)
    if s is None:
        return None
    # with -b = s^2 and z a root of X^3 + bX + b^2, (-1/s) z satisfies X^3 - X - s
    chain = c.chain + (Scale(-(s.inverse())),)
    return CanonicalCubic(ARTIN_SCHREIER, s, chain)


# -- Artin-Schreier standardization -------------------------------------------------


def _cube_root_code(K, code):
    """Inverse Frobenius x -> x^3 in a characteristic-3 field spec."""
    if code == 0:
        return 0
    return K.pow_(code, K.q // 3)


def as_reduce_poles(a: RatFunc):
    """(c, w) with c = a - (w^3 - w) and every pole order of c coprime to 3;
    never raises on trivial extensions (c then lies in w0^3 - w0 + F_q)."""
    F = a.field
    if F.p != 3:
        raise WrongCharacteristic("Artin-Schreier standard form needs p = 3")
    c = a
    w_total = RatFunc.zero(F)

    changed = True
    while changed:
        changed = False
        # finite poles of order divisible by 3
        for fpoly, mult in c.den.factor():
            if mult % 3 != 0:
                continue
            m = mult // 3
            rf = residue_field(F, Place(fpoly))
            lead = rf.reduce(c * RatFunc(fpoly) ** mult)
            root = _cube_root_code(rf.field, lead.code)
            gpoly = rf.lift(root)
            w = RatFunc(gpoly) / RatFunc(fpoly) ** m
            c = c - (w**3 - w)
            w_total = w_total + w
            changed = True
            break
        if changed:
            continue
        # the pole at infinity: polynomial part of degree divisible by 3
        polypart, _ = c.num.divmod(c.den)
        d0 = polypart.degree
        if d0 > 0 and d0 % 3 == 0:
            lead = polypart.lc()
            root = _cube_root_code(F, lead)
            w = RatFunc(FqPoly(F, [0] * (d0 // 3) + [root]))
            c = c - (w**3 - w)
            w_total = w_total + w
            changed = True

    return c, w_total


def constant_as_root(field, code):
    """w0 in F_q with w0^3 - w0 = code, or None."""
    for w0 in range(field.q):
        if field.sub(field.pow_(w0, 3), w0) == code:
            return w0
    return None


def as_standardize_full(a: RatFunc):
    """(c, w) with c = a - (w^3 - w) and every pole order of c coprime to 3.

    Raises DegenerateArtinSchreier when a is of the form w^3 - w (trivial
    extension)."""
    c, w_total = as_reduce_poles(a)
    if c.is_constant() and constant_as_root(a.field, c.constant_code()) is not None:
        raise DegenerateArtinSchreier("parameter is w^3 - w up to the computed correction")
    return c, w_total


def as_standardize(a: RatFunc) -> RatFunc:
    """Hasse standard form of an Artin-Schreier parameter: all pole orders
    coprime to 3, same extension."""
    return as_standardize_full(a)[0]


# -- Kummer standardization ----------------------------------------------------------


def kummer_standardize_full(a: RatFunc):
    """(a', c) with a' = a * c^3 a polynomial u * prod p_i^{lambda_i},
    lambda_i in {1, 2}; requires q = 1 mod 3 and a not a cube."""
    F = a.field
    if F.q % 3 != 1:
        raise WrongResidue("Kummer standard form needs q = 1 mod 3")
    if a.is_zero():
        raise ZeroInput("Kummer parameter must be nonzero")
    exps = {}
    for fpoly, m in a.num.factor():
        exps[fpoly] = exps.get(fpoly, 0) + m
    unit = a.num.lc()
    for fpoly, m in a.den.factor():
        exps[fpoly] = exps.get(fpoly, 0) - m
    aprime = FqPoly.const(F, unit)
    c = RatFunc.one(F)
    any_factor = False
    for fpoly, m in sorted(exps.items(), key=lambda kv: kv[0].key()):
        lam = m % 3
        if lam:
            aprime = aprime * fpoly**lam
            any_factor = True
        c = c * RatFunc(fpoly) ** ((lam - m) // 3)
    if not any_factor and fq_is_cube(FqElem(F, unit)):
        raise CubeInput("parameter is a cube; the extension is trivial")
    return RatFunc(aprime), c


def kummer_standardize(a: RatFunc) -> RatFunc:
    return kummer_standardize_full(a)[0]


# -- purely cubic witnesses -----------------------------------------------------------


@dataclass(frozen=True)
class PureCubicWitness:
    """u = y^2 + k*y + shift generates the same field with u^3 = b."""

    k: RatFunc
    b: RatFunc
    u_description: str
    delta: RatFunc = None  # p != 2: a square root of a^2 - 4
    as_root: RatFunc = None  # p = 2: the root of X^2 - X = 1/a^2

    def u_elem(self, ring: ringops.CubicRing) -> ringops.RingElem:
        F = self.k.field
        y = ring.y
        shift = RatFunc.from_int(F, -2) if F.p != 2 else RatFunc.zero(F)
        return y * y + y * self.k + ring.from_ratfunc(shift)


def solve_as_quadratic(c: RatFunc):
    """A root w of X^2 - X = c over F_q(x) in characteristic 2, or None.

    The denominator of c must be a square E^2; then w = C/E where C runs
    over the coprime splittings C(C + E) = numerator."""
    F = c.field
    if F.p != 2:
        raise WrongCharacteristic("Artin-Schreier quadratics need p = 2")
    if c.is_zero():
        return RatFunc.zero(F)
    E = poly_sqrt(c.den)
    if E is None:
        return None
    N = c.num
    fac = N.factor()
    parts = [fpoly**m for fpoly, m in fac]
    unit = fac.unit
    q = F.q
    best = None
    for mask in range(1 << len(parts)):
        m1 = FqPoly.one(F)
        for i, part in enumerate(parts):
            if mask >> i & 1:
                m1 = m1 * part
        m2 = N.monic().exact_div(m1)
        for u in range(1, q):
            v = F.div(unit, u)
            C = m1.scale(u)
            if C + m2.scale(v) == E:
                w = RatFunc(C, E)
                for cand in (w, w + 1):
                    if best is None or cand.key() < best.key():
                        best = cand
    return best


def purely_cubic_test(a: RatFunc):
    """Witness that X^3 - 3X - a generates a purely cubic field, or None.

    p != 2: requires a^2 - 4 to be a square delta^2; then u = y^2 + ky - 2
    with k = (-a + delta)/2 satisfies u^3 = b = (a^2-4)(ak+2).
    p = 2: requires X^2 - X = 1/a^2 solvable, w its root; then u = y^2 + ky
    with b = w/a^2 and k = b/a^3 satisfies u^3 = b.
    """
    F = a.field
    if F.p == 3:
        raise WrongCharacteristic("purely cubic criterion needs p != 3")
    if a.is_zero() or (a * a - 4).is_zero():
        raise ReducibleInput("X^3 - 3X - a is reducible for a = 0 or a^2 = 4")
    if F.p != 2:
        delta = ratfunc_sqrt(a * a - 4)
        if delta is None:
            return None
        k = (delta - a) / 2
        b = (a * a - 4) * (a * k + 2)
        return PureCubicWitness(k=k, b=b, u_description="y^2 + k*y - 2", delta=delta)
    w = solve_as_quadratic((a * a).inverse())
    if w is None:
        return None
    # b^2 + a^4 b + a^6 = 0 with b = a^4 w, and k = b/a^3 = a*w solves k^2 + ak + 1 = 0
    b = a**4 * w
    k = a * w
    return PureCubicWitness(k=k, b=b, u_description="y^2 + k*y", as_root=w)
