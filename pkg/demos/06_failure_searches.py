"""Replay the documented stability failures from the fixture library."""

from hppoly.fixtures import run_all, run_fixture

print("full fixture sweep:")
for res in run_all():
    print(" ", res.line())

print()
print("a perturbation window in detail: a once-perturbed pencil has nonreal")
print("roots only for eps inside a fixed interval:")
for eps in (0.05, 0.2, 0.4, 0.6):
    r = run_fixture("relaxed-fano-window", eps=eps)
    print(f"  eps={eps:<4} nonreal roots: {r.details['nonreal']}")
