"""F_q[x] arithmetic and factorization, F_q(x) rational functions, places,
valuations, residue fields, and cube tests over F_{q^2}[x].

FqPoly works over any spec catching the small duck-typed field protocol
(FieldSpec or QuadExtSpec): coefficients are raw integer codes, low degree
first, with no trailing zeros.  The zero polynomial has an empty
coefficient tuple and degree -inf.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from functools import lru_cache

from . import gfq
from .errors import (
    MixedFields,
    NegativeValuation,
    ParseError,
    ZeroInput,
    ZeroPolynomial,
)

NEG_INF = -math.inf


class FqPoly:
    """Dense univariate polynomial over a finite field spec."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs, *, normalized=False):
        self.field = field
        if normalized:
            self.coeffs = tuple(coeffs)
        else:
            cs = list(coeffs)
            while cs and cs[-1] == 0:
                cs.pop()
            self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(field):
        return FqPoly(field, (), normalized=True)

    @staticmethod
    def one(field):
        return FqPoly(field, (field.one,), normalized=True)

    @staticmethod
    def x(field):
        return FqPoly(field, (0, field.one), normalized=True)

    @staticmethod
    def const(field, code):
        return FqPoly(field, (code,) if code else (), normalized=True)

    @staticmethod
    def from_codes(field, codes):
        return FqPoly(field, codes)

    # -- basic queries ----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (self.field.one,)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of zero")
        return self.coeffs[-1]

    def constant_code(self):
        return self.coeffs[0] if self.coeffs else 0

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def _check(self, other):
        if isinstance(other, FqPoly):
            if self.field is not other.field and self.field != other.field:
                raise MixedFields("polynomials over different fields")
            return other
        if isinstance(other, int):
            return FqPoly.const(self.field, other % self.field.p)
        return NotImplemented

    # -- ring operations --------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return FqPoly(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return FqPoly(F, tuple(F.neg(c) for c in self.coeffs), normalized=True)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FqPoly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return FqPoly(F, out)

    __rmul__ = __mul__

    def scale(self, code):
        F = self.field
        if code == 0:
            return FqPoly.zero(F)
        return FqPoly(F, tuple(F.mul(c, code) for c in self.coeffs), normalized=True)

    def shift(self, k):
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return FqPoly(self.field, (0,) * k + self.coeffs, normalized=True)

    def __pow__(self, k):
        result = FqPoly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other):
        F = self.field
        other = self._check(other)
        if other.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lc = F.inv(b[-1])
        if len(a) - 1 < db:
            return FqPoly.zero(F), self
        q = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                f = F.mul(c, inv_lc)
                q[i - db] = f
                for j in range(db + 1):
                    if b[j]:
                        a[i - db + j] = F.sub(a[i - db + j], F.mul(f, b[j]))
        return FqPoly(F, q), FqPoly(F, a[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        assert r.is_zero(), "non-exact division"
        return q

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.field.inv(self.lc()))

    def gcd(self, other):
        a, b = self, self._check(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other):
        """Return (g, s, t) with g = s*self + t*other, g monic (or zero)."""
        F = self.field
        a, b = self, self._check(other)
        s0, s1 = FqPoly.one(F), FqPoly.zero(F)
        t0, t1 = FqPoly.zero(F), FqPoly.one(F)
        while not b.is_zero():
            q, r = a.divmod(b)
            a, b = b, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if a.is_zero():
            return a, s0, t0
        c = F.inv(a.lc())
        return a.scale(c), s0.scale(c), t0.scale(c)

    def evaluate(self, code):
        """Horner evaluation at a field code."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, code), c)
        return acc

    def derivative(self):
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(self.coeffs[i], F.scalar(i)))
        return FqPoly(F, out)

    def pow_mod(self, k, modulus):
        result = FqPoly.one(self.field)
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result

    def map_coeffs(self, fn, new_field):
        return FqPoly(new_field, [fn(c) for c in self.coeffs])

    # -- ordering / identity ------------------------------------------------------

    def key(self):
        return (len(self.coeffs), self.coeffs)

    def __eq__(self, other):
        return isinstance(other, FqPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(type(self)), self.coeffs, self.field.q))

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"FqPoly({self.field!r}, {poly_str(self)!r})"

    # -- factorization ------------------------------------------------------------

    def is_irreducible(self):
        """Rabin irreducibility test."""
        f = self
        n = f.degree
        if n is NEG_INF or n == 0:
            return False
        if n == 1:
            return True
        f = f.monic()
        F = self.field
        q = F.q
        x = FqPoly.x(F)
        if x.pow_mod(q**n, f) != x % f:
            return False
        primes, m, d = set(), n, 2
        while d * d <= m:
            while m % d == 0:
                primes.add(d)
                m //= d
            d += 1
        if m > 1:
            primes.add(m)
        for r in primes:
            h = x.pow_mod(q ** (n // r), f) - x
            if f.gcd(h).degree != 0:
                return False
        return True

    def _pth_root(self):
        """Inverse Frobenius on coefficients; valid when all exponents are
        multiples of p."""
        F = self.field
        p = F.p
        root_exp = F.q // p  # c -> c^(q/p) is the inverse of c -> c^p
        out = []
        for i in range(0, len(self.coeffs), p):
            out.append(F.pow_(self.coeffs[i], root_exp) if self.coeffs[i] else 0)
        return FqPoly(F, out)

    def squarefree_decomposition(self):
        """List of (squarefree monic factor, multiplicity), characteristic aware."""
        f = self.monic()
        out = []
        if f.degree is NEG_INF or f.degree == 0:
            return out
        p = self.field.p

        def rec(g, mult):
            if g.degree == 0:
                return
            gp = g.derivative()
            if gp.is_zero():
                rec(g._pth_root(), mult * p)
                return
            c = g.gcd(gp)
            w = g.exact_div(c)
            i = 1
            while not w.is_one():
                y = w.gcd(c)
                fac = w.exact_div(y)
                if fac.degree > 0:
                    out.append((fac, i * mult))
                w, c = y, c.exact_div(y)
                i += 1
            if not c.is_one():
                rec(c._pth_root(), mult * p)

        rec(f, 1)
        return out

    def factor(self):
        """Complete factorization into monic irreducibles.

        Deterministic: internal randomness is seeded from a hash of the
        input, and factors are returned sorted by (degree, coefficients).
        """
        if self.is_zero():
            raise ZeroPolynomial("factorization of zero polynomial")
        F = self.field
        unit = self.lc()
        factors = {}
        for sqfree, mult in self.squarefree_decomposition():
            for irr in _factor_squarefree(sqfree):
                factors[irr] = factors.get(irr, 0) + mult
        ordered = tuple(sorted(factors.items(), key=lambda kv: kv[0].key()))
        return Factorization(F, unit, ordered)

    def roots(self):
        """Roots in the coefficient field, each once, canonical order."""
        if self.is_zero():
            raise ZeroPolynomial("roots of zero polynomial")
        F = self.field
        x = FqPoly.x(F)
        g = self.gcd(x.pow_mod(F.q, self) - x) if self.degree > 1 else self.monic()
        out = [F.neg(fac.constant_code()) for fac, _ in g.factor() if fac.degree == 1]
        return sorted(out)


def _stable_seed(poly: FqPoly, salt):
    return hash((poly.field.q, poly.coeffs, salt, 0x5EED))


def _factor_squarefree(f: FqPoly):
    """Distinct-degree then equal-degree splitting of a squarefree monic."""
    F = f.field
    q = F.q
    out = []
    x = FqPoly.x(F)
    h = x % f
    v = f
    d = 0
    while v.degree > 0:
        d += 1
        if 2 * d > v.degree:
            out.append(v)
            break
        h = h.pow_mod(q, v)
        g = v.gcd(h - x)
        if g.degree > 0:
            out.extend(_equal_degree_split(g, d))
            v = v.exact_div(g)
            h = h % v
    return out


def _equal_degree_split(f: FqPoly, d):
    """Cantor-Zassenhaus on a product of distinct irreducibles of degree d."""
    F = f.field
    q = F.q
    n = f.degree
    if n == d:
        return [f]
    rng = random.Random(_stable_seed(f, d))
    work, done = [f], []
    while work:
        g = work.pop()
        if g.degree == d:
            done.append(g)
            continue
        while True:
            r = FqPoly(F, [rng.randrange(q) for _ in range(g.degree)])
            if r.degree < 1:
                continue
            if F.p == 2:
                # trace map over F_{q^d}
                t = r % g
                acc = t
                for _ in range(F.n * d - 1):
                    t = (t * t) % g
                    acc = (acc + t) % g
                h = g.gcd(acc)
            else:
                e = (q**d - 1) // 2
                h = g.gcd(r.pow_mod(e, g) - 1)
            if 0 < h.degree < g.degree:
                work.append(h)
                work.append(g.exact_div(h))
                break
    return sorted(done, key=lambda p: p.key())


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^exponent), factors monic irreducible, sorted."""

    field: object
    unit: int
    factors: tuple

    def rebuild(self):
        acc = FqPoly.const(self.field, self.unit)
        for f, e in self.factors:
            acc = acc * f**e
        return acc

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def poly_factor(f: FqPoly) -> Factorization:
    return f.factor()


def poly_sqrt(f: FqPoly):
    """(unit-adjusted) square root of a polynomial, or None.

    Returns g with g^2 = f when one exists in F_q[x]; g is chosen with the
    canonically smaller leading-coefficient code of the two roots.
    """
    if f.is_zero():
        return f
    F = f.field
    fac = f.factor()
    root = FqPoly.one(F)
    for p_, e in fac:
        if e % 2:
            return None
        root = root * p_ ** (e // 2)
    u = gfq.fq_sqrt(gfq.FqElem(F, fac.unit))
    if u is None:
        return None
    return root.scale(u.code)


def poly_cube_root(f: FqPoly):
    """g with g^3 = f, or None; canonical unit cube root."""
    if f.is_zero():
        return f
    F = f.field
    fac = f.factor()
    root = FqPoly.one(F)
    for p_, e in fac:
        if e % 3:
            return None
        root = root * p_ ** (e // 3)
    u = gfq.fq_cube_root(gfq.FqElem(F, fac.unit))
    if u is None:
        return None
    return root.scale(u.code)


# -- rational functions ----------------------------------------------------------


class RatFunc:
    """Element of F_q(x) in canonical form: monic denominator, coprime parts."""

    __slots__ = ("num", "den")

    def __init__(self, num: FqPoly, den: FqPoly = None, *, normalized=False):
        if den is None:
            den = FqPoly.one(num.field)
        if normalized:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroPolynomial("zero denominator")
        if num.is_zero():
            self.num, self.den = num, FqPoly.one(num.field)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        c = den.lc()
        if c != num.field.one:
            inv = num.field.inv(c)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def zero(field):
        return RatFunc(FqPoly.zero(field))

    @staticmethod
    def one(field):
        return RatFunc(FqPoly.one(field))

    @staticmethod
    def x(field):
        return RatFunc(FqPoly.x(field))

    @staticmethod
    def const(field, code):
        return RatFunc(FqPoly.const(field, code))

    @staticmethod
    def from_int(field, m):
        return RatFunc(FqPoly.const(field, m % field.p))

    @property
    def field(self):
        return self.num.field

    # -- arithmetic ---------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if self.field != other.field:
                raise MixedFields("rational functions over different fields")
            return other
        if isinstance(other, FqPoly):
            return RatFunc(other)
        if isinstance(other, int):
            return RatFunc.from_int(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroInput("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num**k, self.den**k)

    def inverse(self):
        if self.is_zero():
            raise ZeroInput("inverse of zero")
        return RatFunc(self.den, self.num)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_one()

    def constant_code(self):
        assert self.is_constant()
        return self.num.constant_code()

    def is_polynomial(self):
        return self.den.is_one()

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(self.field, other)
        return (
            isinstance(other, RatFunc)
            and self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def key(self):
        return (self.num.key(), self.den.key())

    def __str__(self):
        return rat_str(self)

    def __repr__(self):
        return f"RatFunc({rat_str(self)!r})"

    # -- square roots ---------------------------------------------------------------

    def is_square(self):
        return ratfunc_sqrt(self) is not None

    def sqrt(self):
        return ratfunc_sqrt(self)


def ratfunc_sqrt(r: RatFunc):
    """Square root in F_q(x), or None.

    Canonical choice: of the two roots +-s, return the one whose numerator
    has the smaller leading-coefficient code.
    """
    if r.is_zero():
        return r
    dn = poly_sqrt(r.den)
    if dn is None:
        return None
    nm = poly_sqrt(r.num)
    if nm is None:
        return None
    F = r.field
    alt = F.neg(nm.lc())
    if alt < nm.lc():
        nm = -nm
    return RatFunc(nm, dn)


def ratfunc_substitute_inverse(r: RatFunc) -> RatFunc:
    """r(1/x) as an element of F_q(x); sends the infinite place to (x)."""
    if r.is_zero():
        return r
    F = r.field
    dn, dd = r.num.degree, r.den.degree
    rev_num = FqPoly(F, tuple(reversed(r.num.coeffs)))
    rev_den = FqPoly(F, tuple(reversed(r.den.coeffs)))
    d = max(dn, dd)
    return RatFunc(rev_num.shift(d - dn), rev_den.shift(d - dd))


def ratfunc_cube_root(r: RatFunc):
    if r.is_zero():
        return r
    dn = poly_cube_root(r.den)
    if dn is None:
        return None
    nm = poly_cube_root(r.num)
    if nm is None:
        return None
    return RatFunc(nm, dn)


# -- places and valuations ---------------------------------------------------------


@dataclass(frozen=True)
class Place:
    """A place of F_q(x): a monic irreducible polynomial, or infinity."""

    poly: object  # FqPoly or None for the infinite place

    def __post_init__(self):
        if self.poly is not None:
            if not self.poly.is_monic() or not self.poly.is_irreducible():
                raise ParseError(f"not a monic irreducible place polynomial: {self.poly}")

    @staticmethod
    def finite(poly: FqPoly):
        return Place(poly.monic())

    @staticmethod
    def infinity():
        return Place(None)

    @property
    def is_infinite(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.poly is None else self.poly.degree

    def residue_size(self, field):
        return field.q**self.degree

    def __str__(self):
        return "inf" if self.poly is None else poly_str(self.poly)

    def __repr__(self):
        return f"Place({self})"


def poly_valuation(f: FqPoly, p: FqPoly):
    """Multiplicity of the monic irreducible p in f (f nonzero)."""
    if f.is_zero():
        return math.inf
    v = 0
    while True:
        q, r = f.divmod(p)
        if not r.is_zero():
            return v
        f = q
        v += 1


def valuation(r: RatFunc, place: Place):
    """v_p(r); +inf for the zero function."""
    if r.is_zero():
        return math.inf
    if place.is_infinite:
        return r.den.degree - r.num.degree
    return poly_valuation(r.num, place.poly) - poly_valuation(r.den, place.poly)


# -- residue fields -----------------------------------------------------------------


class ResidueField:
    """k(p) = F_q[x]/(f) materialized as a FieldSpec over the prime field,
    together with the embedding of F_q and the image of x."""

    def __init__(self, base_field, place: Place):
        if place.is_infinite:
            raise ParseError("residue fields are materialized for finite places only")
        self.base = base_field
        self.place = place
        d = place.degree
        if d == 1:
            self.field = base_field
            self.embed = lambda c: c
            self.x_image = base_field.neg(place.poly.constant_code())
        else:
            big = gfq.make_field(base_field.p, base_field.n * d)
            emb = gfq.embed_field(base_field, big)
            self.field = big
            self.embed = emb
            mapped = place.poly.map_coeffs(emb, big)
            roots = mapped.roots()
            assert roots, "place polynomial must split in its residue field"
            self.x_image = roots[0]

    def reduce_poly(self, f: FqPoly):
        acc = 0
        K = self.field
        for c in reversed(f.coeffs):
            acc = K.add(K.mul(acc, self.x_image), self.embed(c))
        return acc

    def reduce(self, r: RatFunc):
        if valuation(r, self.place) < 0:
            raise NegativeValuation(f"{r} has a pole at {self.place}")
        dv = self.reduce_poly(r.den)
        # canonical form is coprime, so the denominator cannot vanish here
        assert dv != 0
        nv = self.reduce_poly(r.num)
        return gfq.FqElem(self.field, self.field.div(nv, dv))

    def lift(self, code) -> FqPoly:
        """The unique F_q[x] polynomial of degree < deg(place) reducing to
        the given residue-field element."""
        d = self.place.degree
        base = self.base
        if d == 1:
            return FqPoly.const(base, code)
        K = self.field
        p, dim = K.p, K.n
        if not hasattr(self, "_lift_cols"):
            cols = []
            for i in range(d):
                xi = 1
                for _ in range(i):
                    xi = K.mul(xi, self.x_image)
                for j in range(base.n):
                    theta = base.from_coords([1 if t == j else 0 for t in range(base.n)])
                    cols.append(K.mul(self.embed(theta), xi))
            self._lift_cols = cols
        # solve sum c_k * col_k = code over F_p by Gaussian elimination
        import itertools as _it

        cols = self._lift_cols
        rows = dim
        mat = [[(c // p**r) % p for c in cols] + [(code // p**r) % p] for r in range(rows)]
        ncols = len(cols)
        piv = []
        rr = 0
        for cc in range(ncols):
            sel = next((r for r in range(rr, rows) if mat[r][cc] % p), None)
            if sel is None:
                continue
            mat[rr], mat[sel] = mat[sel], mat[rr]
            inv = pow(mat[rr][cc], p - 2, p) if p > 2 else mat[rr][cc]
            mat[rr] = [v * inv % p for v in mat[rr]]
            for r in range(rows):
                if r != rr and mat[r][cc] % p:
                    f = mat[r][cc]
                    mat[r] = [(v - f * w) % p for v, w in zip(mat[r], mat[rr])]
            piv.append(cc)
            rr += 1
            if rr == rows:
                break
        sol = [0] * ncols
        for r, cc in enumerate(piv):
            sol[cc] = mat[r][-1] % p
        coeffs = []
        for i in range(d):
            digits = sol[i * base.n : (i + 1) * base.n]
            coeffs.append(base.from_coords(digits))
        out = FqPoly(base, coeffs)
        assert self.reduce_poly(out) == code, "lift failed"
        return out


@lru_cache(maxsize=None)
def _residue_field_cached(base_field, place):
    return ResidueField(base_field, place)


def residue_field(base_field, place: Place) -> ResidueField:
    return _residue_field_cached(base_field, place)


def residue(r: RatFunc, place: Place):
    """Image of r in k(p); requires v_p(r) >= 0."""
    return residue_field(r.field, place).reduce(r)


# -- quadratic-extension factorization ----------------------------------------------


def lift_to_quad_ext(f: FqPoly, ext: gfq.QuadExtSpec) -> FqPoly:
    return FqPoly(ext, [ext.from_base(c) for c in f.coeffs])


def pair_poly(A: FqPoly, B: FqPoly, ext: gfq.QuadExtSpec) -> FqPoly:
    """The element A + tB (resp. A + xi B) of F_{q^2}[x]."""
    n = max(len(A.coeffs), len(B.coeffs))
    cs = []
    for i in range(n):
        a = A.coeffs[i] if i < len(A.coeffs) else 0
        b = B.coeffs[i] if i < len(B.coeffs) else 0
        cs.append(ext.pair(a, b))
    return FqPoly(ext, cs)


def split_pair_poly(f: FqPoly):
    """Inverse of pair_poly: (A, B) over the base field."""
    ext = f.field
    A, B = [], []
    for c in f.coeffs:
        a, b = ext.split(c)
        A.append(a)
        B.append(b)
    return FqPoly(ext.base, A), FqPoly(ext.base, B)


def conj_poly(f: FqPoly) -> FqPoly:
    ext = f.field
    return FqPoly(ext, [ext.conj(c) for c in f.coeffs], normalized=True)


def factor_over_quad_ext(f: FqPoly, ext: gfq.QuadExtSpec = None) -> Factorization:
    """Factor an F_q[x] polynomial over F_{q^2}[x]."""
    if f.is_zero():
        raise ZeroPolynomial("factorization of zero polynomial")
    if ext is None:
        ext = gfq.quad_ext(f.field)
    return lift_to_quad_ext(f, ext).factor()


def is_cube_up_to_unit(g: FqPoly):
    """If g = c * h^3 with c a unit, return (c, h, c_is_cube); else None."""
    if g.is_zero():
        raise ZeroPolynomial("cube test of zero polynomial")
    fac = g.factor()
    h = FqPoly.one(g.field)
    for p_, e in fac:
        if e % 3:
            return None
        h = h * p_ ** (e // 3)
    F = g.field
    if isinstance(F, gfq.QuadExtSpec):
        unit_is_cube = F.is_cube(fac.unit)
    else:
        unit_is_cube = gfq.fq_is_cube(gfq.FqElem(F, fac.unit))
    return fac.unit, h, unit_is_cube


# -- printing --------------------------------------------------------------------


def _coeff_str(field, code, with_star):
    s = field.elem_str(code)
    if re.fullmatch(r"\d+", s):
        return s
    return f"({s})"


def poly_str(f: FqPoly, var="x"):
    """Canonical printing: descending powers, coefficients in field-literal form."""
    if f.is_zero():
        return "0"
    F = f.field
    terms = []
    for i in reversed(range(len(f.coeffs))):
        c = f.coeffs[i]
        if c == 0:
            continue
        cs = _coeff_str(F, c, i > 0)
        if i == 0:
            terms.append(cs)
        else:
            xs = var if i == 1 else f"{var}^{i}"
            terms.append(xs if c == F.one else f"{cs}*{xs}")
    return "+".join(terms)


def rat_str(r: RatFunc):
    if r.den.is_one():
        return poly_str(r.num)
    return f"({poly_str(r.num)})/({poly_str(r.den)})"


def place_str(p: Place):
    return str(p)


# -- parsing ---------------------------------------------------------------------


def _split_top(s, seps):
    """Split on separators not nested in parentheses; keeps separators."""
    parts, buf, depth = [], "", 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {s!r}")
        if depth == 0 and ch in seps:
            parts.append(buf)
            parts.append(ch)
            buf = ""
        else:
            buf += ch
    parts.append(buf)
    if depth:
        raise ParseError(f"unbalanced parentheses in {s!r}")
    return parts


def poly_parse(field, text, var="x") -> FqPoly:
    """Term grammar: 'c*x^k', 'x^k', 'c' joined by '+'/'-'; c is a field
    literal (integer, or t-polynomial, parenthesized when compound)."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    pieces = _split_top(s, "+-")
    result = FqPoly.zero(field)
    sign = 1
    seen_term = False
    for piece in pieces:
        if piece == "+" or piece == "":
            continue
        if piece == "-":
            sign = -sign
            continue
        term = _parse_term(field, piece, var)
        if sign == -1:
            term = -term
        result = result + term
        sign = 1
        seen_term = True
    if not seen_term:
        raise ParseError(f"malformed polynomial {text!r}")
    return result


def _parse_term(field, term, var):
    factors = _split_top(term, "*")
    poly = FqPoly.one(field)
    xpow = 0
    for f in factors:
        if f == "*" or f == "":
            continue
        if f == var:
            xpow += 1
        elif f.startswith(var + "^"):
            xpow += int(f[len(var) + 1 :])
        elif f.startswith("("):
            # (sub-polynomial) optionally raised to a power
            close = f.rfind(")")
            inner, tail = f[1:close], f[close + 1 :]
            k = 1
            if tail:
                if not tail.startswith("^"):
                    raise ParseError(f"malformed factor {f!r}")
                k = int(tail[1:])
            if var in inner:
                poly = poly * poly_parse(field, inner, var) ** k
            else:
                e = gfq._parse_field_literal(field, inner)
                poly = poly.scale(field.pow_(e.code, k))
        else:
            try:
                e = gfq._parse_field_literal(field, f)
            except ParseError:
                raise ParseError(f"cannot parse coefficient {f!r}")
            poly = poly.scale(e.code)
    return poly.shift(xpow)


def rat_parse(field, text) -> RatFunc:
    """'<poly>' or '(<poly>)/(<poly>)' (parentheses optional around simple terms)."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty rational function")
    parts = _split_top(s, "/")
    chunks = [p for p in parts if p not in ("/", "")]
    nslash = parts.count("/")
    if nslash == 0:
        body = s[1:-1] if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]) else s
        return RatFunc(poly_parse(field, body))
    if nslash == 1 and len(chunks) == 2:
        a, b = chunks
        a = a[1:-1] if a.startswith("(") and a.endswith(")") and _balanced(a[1:-1]) else a
        b = b[1:-1] if b.startswith("(") and b.endswith(")") and _balanced(b[1:-1]) else b
        den = poly_parse(field, b)
        if den.is_zero():
            raise ParseError("zero denominator")
        return RatFunc(poly_parse(field, a), den)
    raise ParseError(f"malformed rational function {text!r}")


def _balanced(s):
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
    return depth == 0


def place_parse(field, text) -> Place:
    s = text.strip()
    if s.lower() in ("inf", "infinity", "oo"):
        return Place.infinity()
    f = poly_parse(field, s).monic()
    if f.degree < 1 or not f.is_irreducible():
        raise ParseError(f"place polynomial must be irreducible: {text!r}")
    return Place(f)
