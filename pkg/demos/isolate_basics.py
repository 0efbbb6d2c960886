#!/usr/bin/env python3
"""Walk through exact real-root isolation on a few hand-picked polynomials."""

from fractions import Fraction

import realroots as rr

# --- a polynomial with known integer roots --------------------------------
# (x-1)(x-2)...(x-6): every root lands on a subdivision point of [0,8], so
# the solver reports them exactly.
p = rr.IntPolynomial.from_roots([1, 2, 3, 4, 5, 6])
print("p =", p.coeffs)
for method in rr.METHODS:
    roots, stats = rr.isolate(p, rr.DyadicInterval(0, 8), method=method)
    desc = ", ".join(
        str(r.exact_root) if r.is_exact else f"({r.interval.lo}, {r.interval.hi})"
        for r in roots
    )
    print(f"  {method:10s}: {desc}   [{stats.tree_nodes} subdivisions]")

# --- an irrational root, refined to many bits ------------------------------
q = rr.IntPolynomial([-2, 0, 1])  # x^2 - 2
roots, _ = rr.isolate(q, rr.DyadicInterval(0, 2))
tight = rr.refine(q, roots[0], Fraction(1, 2**50))
print("\nsqrt(2) in", f"[{tight.interval.lo}, {tight.interval.hi}]")
print("         ~", float(tight.interval.midpoint))

# --- automatic interval from the coefficient-ratio root bound ---------------
w = rr.IntPolynomial.from_roots([-7, Fraction(-1, 2), 3, 11])
print("\nbound on positive roots:", rr.hong_root_bound(w))
roots, stats = rr.isolate_all(w)
print("isolated", len(roots), "roots inside [-%s, %s]" % (
    rr.hong_root_bound(w.compose_neg()), rr.hong_root_bound(w)))

# --- exact root counting without isolation ---------------------------------
seq = rr.sturm_sequence(w)
print("roots in (0, 4]:", rr.count_in(seq, Fraction(0), Fraction(4)))
print("roots in all of R:", rr.count_all_real(w))

# --- minimum distance between real roots -----------------------------------
lo, hi = rr.min_separation(w, Fraction(1, 2**20))
print("minimum root gap within", f"[{float(lo):.6f}, {float(hi):.6f}]")
