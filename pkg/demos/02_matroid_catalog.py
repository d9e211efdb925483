"""Browse the matroid catalog and the operations that act on it."""

from hppoly import catalog, catalog_manifest, connected, graphic_matroid, complete_graph
from hppoly.catalog import catalog_names

print(f"{'name':<20} {'n':>2} {'rank':>4} {'bases':>5}  hpp?")
man = catalog_manifest()
for name in catalog_names():
    M = catalog(name)
    status = man.get(name, {}).get("status", {})
    hpp = {True: "yes", False: "no", None: "open"}.get(status.get("hpp"), "-")
    print(f"{name:<20} {M.n:>2} {M.rank:>4} {len(M.bases):>5}  {hpp}")

print()
F7 = catalog("F7")
print("Fano-type example: the relaxation chain adds one basis per step:")
for name in ("F7", "F7m", "F7mm"):
    print(f"  {name}: {len(catalog(name).bases)} bases")

print()
K4 = graphic_matroid(complete_graph(4))
print(f"cycle matroid of the complete graph on 4 vertices: {len(K4.bases)} spanning trees")
print("connected?", connected(K4))
print("dual rank:", K4.dual().rank)

print()
print("parametric families: three disjoint 3-point lines =", catalog("L_{3,3,3;0}"))
print("two concurrent lines with a free point     =", catalog("M_{2,2}"))
