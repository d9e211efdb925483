"""Stable polynomials from matrices: all-minors determinants and permanents."""

import numpy as np

from hppoly import (
    det_construction,
    hpp_random_rays,
    matching_polynomial,
    per_construction,
    support_matroid,
    unimodular_minor_check,
)
from hppoly.matroids import Graph

rng = np.random.default_rng(0)

A = rng.normal(size=(3, 6)) + 1j * rng.normal(size=(3, 6))
P = det_construction(A)
print("random 3x6 complex matrix ->", len(P.terms()), "squared-minor coefficients")
M = support_matroid(P)
print("its support is a matroid of rank", M.rank, "with", len(M.bases), "bases")
print("ray search stays clean:", hpp_random_rays(P, 20000, seed=2).verdict)

print()
B = np.array([[1, 1, 0, 0, 0, 1, 1], [0, 1, 1, 1, 0, 0, 1], [0, 0, 0, 1, 1, 1, 1]], float)
print("a 0/1 matrix with a non-unimodular minor:")
print("  unimodular columns check:", unimodular_minor_check(B))
print("  one coefficient of det-construction is 4 (a squared minor of modulus 2):")
print("  coefficient on columns {1,3,5}:", det_construction(B.astype(complex)).coeff((1, 3, 5)))

print()
L = np.ones((3, 6))
Q = per_construction(L)
print("all-ones 3x6 permanent construction: every coefficient =", Q.coeff((0, 1, 2)))
print("(3! times the 3-of-6 polynomial)")

print()
G = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
MG = matching_polynomial(G)
print("matching polynomial of a wheel-ish graph has", len(MG.terms()), "matchings")
print("its complement (for the stability theory) is MG.dual()")
