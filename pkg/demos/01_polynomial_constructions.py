"""Tour of the stability-preserving polynomial constructions.

Builds small multiaffine polynomials and walks through duality, deletion
and contraction, series/parallel connections, weighted truncations and
extensions, folding, and convolution, printing each result.
"""

import itertools

from hppoly import (
    MultiAffinePolynomial,
    convolution,
    fold_mod2,
    parallel_connection,
    principal_cotruncation,
    principal_extension,
    principal_truncation,
    series_connection,
    two_sum,
)
from hppoly.poly import GeneralPolynomial, members_of


def show(label, P):
    terms = ", ".join(
        f"{c.real:g}*x{''.join(map(str, members_of(m)))}" if m else f"{c.real:g}"
        for m, c in P.terms()
    )
    print(f"{label:<38} {terms or '0'}")


def elementary(r, n):
    return MultiAffinePolynomial.from_subsets(
        n, {c: 1.0 for c in itertools.combinations(range(n), r)}
    )


P = elementary(2, 3)
show("two-of-three polynomial P", P)
show("dual P* (complement supports)", P.dual())
show("delete element 0", P.delete(0))
show("contract element 0", P.contract(0))

print()
L = MultiAffinePolynomial.from_subsets(2, {(0,): 1.0, (1,): 1.0})
show("line polynomial L = x0 + x1", L)
show("parallel connection L || L at 0", parallel_connection(L, L, 0))
show("series connection L & L at 0", series_connection(L, L, 0))
show("2-sum of P with itself at 0", two_sum(P, P, 0))

print()
show("truncation of P, weights 1/2", principal_truncation(P, [0.5] * 3))
show("extension of P, weights 1/2", principal_extension(P, [0.5] * 3))
print("   (the extension is the 2-of-4 polynomial: a free point was added)")
show("cotruncation of x0+x1+x2, w=1/2", principal_cotruncation(elementary(1, 3), [0.5] * 3))

print()
one_plus = MultiAffinePolynomial.from_subsets(1, {(): 1.0, (0,): 1.0})
one_minus = MultiAffinePolynomial.from_subsets(1, {(): 1.0, (0,): -1.0})
show("(1+x) * (1-x) under convolution", convolution(one_plus, one_minus))
print("   convolution has zero divisors, but never among stable factors")

quad = GeneralPolynomial.univariate([6.0, 5.0, 1.0])  # (x+2)(x+3)
print("\nfolding exponents mod 2 of (x+2)(x+3):", fold_mod2(quad).terms())
print("matches the closed form (1 + 2*3) + (2+3) x")
