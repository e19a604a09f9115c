#!/usr/bin/env python3
"""Survey the Galois cubic extensions of F_q(x) built from small norm pairs.

Enumerates coprime (A, B) up to a degree bound, constructs the Galois
standard parameters, and tabulates irreducibility, constant extensions,
genus, and the inert/split statistics at degree-one places (Chebotarev
predicts 1/3 split : 2/3 inert among unramified places for a cyclic cubic).

Usage: python scripts/survey_splitting.py [--q 5] [--max-deg 2]
"""

import argparse
import itertools
from collections import Counter

from cubicff import galoiskit as gk
from cubicff import gfq
from cubicff import normalform as nf
from cubicff import placegeom as pg
from cubicff.polyrat import FqPoly, Place


def all_polys(field, max_deg):
    for deg in range(max_deg + 1):
        for codes in itertools.product(range(field.q), repeat=deg + 1):
            if codes[-1] == 0 and deg > 0:
                continue
            f = FqPoly(field, list(codes))
            if not f.is_zero():
                yield f


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=5)
    ap.add_argument("--max-deg", type=int, default=2)
    args = ap.parse_args()
    F = gfq.make_field_q(args.q)
    if F.q % 3 != 2:
        raise SystemExit("pick q = -1 mod 3 (2, 5, 8, 11, ...)")

    seen = set()
    genus_hist = Counter()
    split_stats = Counter()
    n_irreducible = n_constant = n_reducible = 0

    deg1_places = [Place(FqPoly(F, [c, F.one])) for c in range(F.q)]

    for A in all_polys(F, args.max_deg):
        for B in all_polys(F, args.max_deg):
            g = A.gcd(B)
            if g.is_zero() or g.degree != 0:
                continue
            a = gk.construct_galois_a(A, B)
            if a.is_zero() or (a * a - 4).is_zero():
                continue
            key = str(a)
            if key in seen:
                continue
            seen.add(key)
            if not gk.is_irreducible_standard(a):
                n_reducible += 1
                continue
            n_irreducible += 1
            canon = nf.CanonicalCubic(nf.STANDARD, a, ())
            if gk.is_constant_extension(canon):
                n_constant += 1
                continue
            genus_hist[pg.genus(canon)] += 1
            for pl in deg1_places:
                split_stats[pg.splitting_type(canon, pl)] += 1

    print(f"q = {F.q}: {len(seen)} distinct parameters from pairs of degree <= {args.max_deg}")
    print(f"  irreducible: {n_irreducible}  (reducible: {n_reducible}, constant: {n_constant})")
    print("  genus distribution:", dict(sorted(genus_hist.items())))
    total = sum(split_stats.values())
    if total:
        print("  degree-1 place behaviour:")
        for kind in (pg.TOTALLY_SPLIT, pg.INERT, pg.RAMIFIED):
            n = split_stats[kind]
            print(f"    {kind:14s} {n:5d}  ({n / total:.3f})")


if __name__ == "__main__":
    main()
