"""Exact rational solving of the equal-coefficient (niceness) systems.

A weighted derivative sum of a basis generating polynomial is again a basis
generating polynomial exactly when the weights solve a 0/1 linear system
with all right-hand sides 1.  The systems here are solved end to end over
the rationals: classification distinguishes a nonnegative solution (nice),
solvable but never nonnegative, and inconsistent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .matroids import Matroid, Presentation
from .poly import mask_of, members_of
from .represent import rectangular_permanent

import numpy as np


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rref, pivot cols)."""
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [v / inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def solve_affine(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]):
    """Exact solution set of A x = b: (particular, kernel basis) or None.

    The kernel basis vectors span the solution set's direction space.
    """
    if not A:
        raise ValueError("empty system")
    ncols = len(A[0])
    aug = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None  # a pivot in the rhs column: inconsistent
    pivot_rows = {c: i for i, c in enumerate(pivots)}
    free = [c for c in range(ncols) if c not in pivot_rows]
    particular = [Fraction(0)] * ncols
    for c, i in pivot_rows.items():
        particular[c] = red[i][ncols]
    kernel = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for c, i in pivot_rows.items():
            v[c] = -red[i][f]
        kernel.append(v)
    return particular, kernel


def _min_norm_point(particular: list[Fraction], kernel: list[list[Fraction]]) -> list[Fraction]:
    """Exact least-norm point of the affine set particular + span(kernel)."""
    if not kernel:
        return particular
    d = len(kernel)
    gram = [[sum(a * b for a, b in zip(kernel[i], kernel[j])) for j in range(d)] for i in range(d)]
    rhs = [-sum(a * b for a, b in zip(kernel[i], particular)) for i in range(d)]
    sol = solve_affine(gram, rhs)
    t, _k = sol
    out = particular[:]
    for i in range(d):
        if t[i]:
            out = [o + t[i] * k for o, k in zip(out, kernel[i])]
    return out


@dataclass(frozen=True)
class NicenessSolution:
    """Classification of an equal-coefficient weight system.

    status: "nice" (nonnegative exact solution, in weights),
    "infeasible-nonneg" (solvable, no nonnegative solution; weights hold one
    exact solution), or "inconsistent" (weights is None).  heuristic marks
    the rare fallback used above kernel dimension 6.
    """

    status: str
    weights: tuple[Fraction, ...] | None = None
    kernel_dim: int = 0
    heuristic: bool = False

    def weights_as_floats(self) -> list[float] | None:
        if self.weights is None:
            return None
        return [float(w) for w in self.weights]


_MAX_VERTEX_DIM = 6


def classify_system(A: list[list[Fraction]], b: list[Fraction]) -> NicenessSolution:
    """Classify A x = 1-type systems by existence of a nonnegative solution."""
    sol = solve_affine(A, b)
    if sol is None:
        return NicenessSolution("inconsistent")
    particular, kernel = sol
    d = len(kernel)
    if d == 0:
        w = tuple(particular)
        ok = all(v >= 0 for v in w)
        return NicenessSolution("nice" if ok else "infeasible-nonneg", w, 0)
    center = _min_norm_point(particular, kernel)
    if all(v >= 0 for v in center):
        return NicenessSolution("nice", tuple(center), d)
    ncols = len(particular)
    if d <= _MAX_VERTEX_DIM:
        # Any nonempty intersection with the nonnegative orthant is pointed,
        # so it has a vertex with at least d coordinates pinned to zero.
        for zeros in itertools.combinations(range(ncols), d):
            sub = [[kernel[j][c] for j in range(d)] for c in zeros]
            rhs = [-center[c] for c in zeros]
            vs = solve_affine(sub, rhs)
            if vs is None or vs[1]:
                continue
            t = vs[0]
            cand = center[:]
            for j in range(d):
                if t[j]:
                    cand = [o + t[j] * k for o, k in zip(cand, kernel[j])]
            if all(v >= 0 for v in cand):
                return NicenessSolution("nice", tuple(cand), d)
        return NicenessSolution("infeasible-nonneg", tuple(center), d)
    # kernel too large for exact vertex enumeration: projected least-squares probe
    An = np.array([[float(v) for v in row] for row in A])
    bn = np.array([float(v) for v in b])
    x = np.maximum(np.linalg.lstsq(An, bn, rcond=None)[0], 0.0)
    for _ in range(500):
        grad = An.T @ (An @ x - bn)
        x = np.maximum(x - 0.5 * grad / max(1.0, np.linalg.norm(An, 2) ** 2), 0.0)
    feasible = np.allclose(An @ x, bn, atol=1e-9)
    w = tuple(Fraction(v).limit_denominator(10**9) for v in x)
    return NicenessSolution(
        "nice" if feasible else "infeasible-nonneg", w, d, heuristic=True
    )


def nice_principal_solve(M: Matroid, flat: Iterable[int]) -> NicenessSolution:
    """Weights making the derivative sum over a set reproduce the truncation.

    Unknowns are indexed by the members of the set (ascending); one equation
    per basis of the truncated matroid.
    """
    fmask = mask_of(flat, M.n)
    felems = members_of(fmask)
    if not felems:
        raise ValueError("empty truncation set")
    tr_bases = sorted(M.truncation_bases(fmask))
    if not tr_bases:
        raise ValueError("truncation has no bases (set avoids every basis)")
    bset = set(M.bases)
    rows = []
    for B in tr_bases:
        row = [Fraction(1 if (B | (1 << f)) in bset and not B & (1 << f) else 0) for f in felems]
        rows.append(row)
    return classify_system(rows, [Fraction(1)] * len(rows))


def nice_cotruncation_solve(M: Matroid, dset: Iterable[int]) -> NicenessSolution:
    """Weights making the lifted sum over a set reproduce the cotruncation."""
    dmask = mask_of(dset, M.n)
    delems = members_of(dmask)
    if not delems:
        raise ValueError("empty cotruncation set")
    co_bases = sorted(M.cotruncation_bases(dmask))
    if not co_bases:
        raise ValueError("cotruncation has no bases")
    bset = set(M.bases)
    rows = []
    for B in co_bases:
        row = [Fraction(1 if B & (1 << d) and (B ^ (1 << d)) in bset else 0) for d in delems]
        rows.append(row)
    return classify_system(rows, [Fraction(1)] * len(rows))


@dataclass(frozen=True)
class WeightVerification:
    uniform: bool
    values: dict[tuple[int, ...], float]
    common: float | None = None


def transversal_weight_verify(
    pres: Presentation,
    weights: Sequence[Sequence[float]],
    rel_tol: float = 1e-9,
) -> WeightVerification:
    """Check whether edge weights give every basis the same matching weight.

    weights[j][k] belongs to the edge between set j and the k-th smallest
    member of that set.  Rows beyond the matroid rank must be entirely
    zero-weighted; otherwise the verification is refused.
    """
    from .matroids import transversal_matroid

    sets = pres.set_members()
    if len(weights) != len(sets):
        raise ValueError("one weight row per presentation set required")
    wmap: list[dict[int, float]] = []
    for j, row in enumerate(weights):
        if len(row) != len(sets[j]):
            raise ValueError(f"weight row {j} length mismatch")
        if any(v < 0 for v in row):
            raise ValueError("weights must be nonnegative")
        wmap.append(dict(zip(sets[j], map(float, row))))
    M = transversal_matroid(pres)
    active = [j for j in range(len(sets)) if any(v > 0 for v in wmap[j].values())]
    if len(active) < M.rank:
        raise ValueError("fewer positively weighted sets than the rank")
    if len(active) > M.rank:
        raise ValueError(
            "more positively weighted sets than the rank: zero out the extras"
        )
    values: dict[tuple[int, ...], float] = {}
    for B in M.bases:
        elems = members_of(B)
        mat = np.array([[wmap[j].get(e, 0.0) for e in elems] for j in active])
        values[elems] = rectangular_permanent(mat)
    vals = list(values.values())
    vmax = max(vals)
    uniform = vmax > 0 and all(abs(v - vals[0]) <= rel_tol * max(1.0, vmax) for v in vals)
    return WeightVerification(uniform, values, vals[0] if uniform else None)
