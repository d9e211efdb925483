"""Exact rational weight systems for truncations, extensions, and matchings."""

from hppoly import catalog, nice_cotruncation_solve, nice_principal_solve, uniform_matroid
from hppoly.catalog import presentation_of
from hppoly.niceness import transversal_weight_verify

print("Can a weighted derivative sum reproduce a basis polynomial exactly?")
print()

sol = nice_principal_solve(catalog("MK4"), [0, 1, 2])
print("extend the K4 cycle matroid on one of its 3-point lines:")
print("  status:", sol.status, "| weights:", [str(w) for w in sol.weights])

sol = nice_principal_solve(catalog("Q7del7"), range(6))
print("\nfree extension behind a 7-point matroid with a 4-point line:")
print("  status:", sol.status, "| unique solution:", [str(w) for w in sol.weights])
print("  (solvable, but one weight is negative, so the construction is unusable)")

sol = nice_principal_solve(catalog("F7m4"), range(7))
print("\nfree extension of a 4-times-relaxed 7-point matroid:")
print("  status:", sol.status, "| weights:", [str(w) for w in sol.weights])

print("\nuniform matroids always work, with closed-form weights:")
for r, n in [(2, 5), (3, 7)]:
    s = nice_principal_solve(uniform_matroid(r, n), range(n))
    c = nice_cotruncation_solve(uniform_matroid(r - 1, n), range(n))
    print(f"  ({r},{n}): truncation weight {s.weights[0]}, lift weight {c.weights[0]}")

print("\nTransversal matchings: equal basis weights need the right edge weights.")
pres = presentation_of("W3")
ver = transversal_weight_verify(pres, [[1.0] * 3] * 3)
print("  rank-3 whirl with unit weights: uniform?", ver.uniform)
print("  basis values:", {k: v for k, v in sorted(ver.values.items())[:4]}, "...")

pres = presentation_of("M_{2,2}")
weights = [[1.0] + [0.5] * 4, [1.0] * 3, [1.0] * 3]
ver = transversal_weight_verify(pres, weights)
print("  two concurrent lines, halved inner weights: uniform?", ver.uniform,
      "| common value:", ver.common)
