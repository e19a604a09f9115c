#!/usr/bin/env python3
"""Plot-free experiment: how the genus grows with the denominator degree.

For each even degree 2d, construct the Galois extension with a single
ramified place of degree 2d (denominator one irreducible norm of an
element A + tB) and report the genus -2 + 2d predicted by the exact
ramification formula, cross-checked against the integral-basis
discriminant.

Usage: python scripts/genus_growth.py [--q 5] [--max-d 4]
"""

import argparse
import itertools

from cubicff import galoiskit as gk
from cubicff import intbasis as ib
from cubicff import normalform as nf
from cubicff import placegeom as pg
from cubicff import gfq
from cubicff.polyrat import FqPoly


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=5)
    ap.add_argument("--max-d", type=int, default=4)
    args = ap.parse_args()
    F = gfq.make_field_q(args.q)
    if F.q % 3 != 2:
        raise SystemExit("pick q = -1 mod 3")

    for d in range(1, args.max_d + 1):
        found = None
        for codes in itertools.product(range(F.q), repeat=d):
            A = FqPoly(F, list(codes) + [F.one])
            for bcodes in itertools.product(range(F.q), repeat=min(d, 2)):
                B = FqPoly(F, list(bcodes))
                if B.is_zero():
                    continue
                g = A.gcd(B)
                if g.is_zero() or g.degree != 0:
                    continue
                a = gk.construct_galois_a(A, B)
                if a.den.degree != 2 * d or not a.den.is_irreducible():
                    continue
                if not gk.is_irreducible_standard(a):
                    continue
                found = a
                break
            if found:
                break
        if not found:
            print(f"2d = {2*d}: no single-place example within the search range")
            continue
        canon = nf.CanonicalCubic(nf.STANDARD, found, ())
        genus = pg.genus(canon)
        disc = ib.basis_discriminant(ib.standard_integral_basis(found))
        print(
            f"ramified place degree {2*d}: a = {found}, genus = {genus}, "
            f"disc degree = {disc.num.degree}"
        )
        assert genus == -2 + 2 * d
        assert disc.num.degree == 4 * d


if __name__ == "__main__":
    main()
