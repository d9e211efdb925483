"""Randomized half-plane searches and certificate verification.

Runs the ray method and the elementary pivot method against matroids with
and without the half-plane property, then re-verifies the certificates
found.  Fixed seeds make every run reproducible.
"""

from hppoly import (
    catalog,
    counterexample_verify,
    hpp_random_elementary,
    hpp_random_rays,
    uniform_matroid,
)

F7 = catalog("F7").basis_polynomial()

print("ray search on the Fano basis polynomial (20k trials):")
rep = hpp_random_rays(F7, 20000, seed=1)
print(" ", rep.verdict, "at trial", rep.certificate.trial)
print("  offending pencil root:", rep.certificate.zeta)
print("  certificate re-verifies:", counterexample_verify(F7, rep.certificate))

print("\nelementary pivot search on the same polynomial (200k trials):")
rep = hpp_random_elementary(F7, 200000, seed=1)
print(" ", rep.verdict, "| offending trials:", rep.hits)
if rep.certificate:
    x = rep.certificate.x
    print("  witness point has min Re x_e =", min(z.real for z in x))
    print("  |P(x)| =", rep.certificate.residual)
    print("  certificate re-verifies:", counterexample_verify(F7, rep.certificate))

print("\nthe same searches stay clean on stable polynomials:")
for name in ("U_{3,6}", "V8"):
    P = catalog(name).basis_polynomial()
    rep = hpp_random_rays(P, 20000, seed=1)
    print(f"  {name}: {rep.verdict}")

U = uniform_matroid(2, 4).basis_polynomial()
print("\nexact degree-2 decision rather than sampling:")
from hppoly import rank2_exact

res = rank2_exact(U)
print(f"  2-of-4 polynomial: stable={res.hpp}, second eigenvalue={res.lambda2:+.3f}")
