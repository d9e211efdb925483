"""Explicit-basis matroids: axioms, minors, duality, connections, constructors.

Bases are stored as a sorted tuple of subset bitmasks over the ground set
0..n-1, which makes equality, hashing and the exhaustive basis-exchange
check cheap at the scales handled here (n <= ~13, a few thousand bases).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .poly import (
    GroundSetError,
    MultiAffinePolynomial,
    connection_index_map,
    mask_of,
    members_of,
)


@dataclass(frozen=True)
class BasisAxiomReport:
    """Outcome of checking B1/B2 on a candidate basis family."""

    ok: bool
    axiom: str | None = None
    witness: tuple | None = None

    def message(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.axiom} violated: {self.witness}"


def check_basis_axioms(n: int, bases: Iterable[int]) -> BasisAxiomReport:
    """Exhaustive check of nonempty-equicardinal (B1) and exchange (B2).

    A B2 witness is (B1, B2, x) with x in B1 - B2 admitting no valid y.
    """
    bs = sorted(set(bases))
    if not bs:
        return BasisAxiomReport(False, "B1", ("empty basis family",))
    sizes = {b.bit_count() for b in bs}
    if len(sizes) != 1:
        small = min(bs, key=lambda b: b.bit_count())
        big = max(bs, key=lambda b: b.bit_count())
        return BasisAxiomReport(False, "B1", (members_of(small), members_of(big)))
    bset = set(bs)
    for b1 in bs:
        for b2 in bs:
            if b1 == b2:
                continue
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            m = only1
            while m:
                xbit = m & -m
                m ^= xbit
                t = only2
                found = False
                while t:
                    ybit = t & -t
                    t ^= ybit
                    if (b1 ^ xbit) | ybit in bset:
                        found = True
                        break
                if not found:
                    x = xbit.bit_length() - 1
                    return BasisAxiomReport(False, "B2", (members_of(b1), members_of(b2), x))
    return BasisAxiomReport(True)


class NotMatroidalError(ValueError):
    """A candidate family of sets fails the basis axioms."""

    def __init__(self, report: BasisAxiomReport):
        super().__init__(report.message())
        self.report = report


class Matroid:
    """Matroid given by its ground-set size and explicit basis bitmasks."""

    __slots__ = ("n", "bases", "_rank")

    def __init__(self, n: int, bases: Iterable[int | Iterable[int]], validate: bool = True):
        if not 0 <= n <= 63:
            raise GroundSetError(f"ground set size {n} not in 0..63")
        masks = sorted(
            {b if isinstance(b, int) else mask_of(b, n) for b in bases}
        )
        full = (1 << n) - 1 if n else 0
        for b in masks:
            if b & ~full:
                raise GroundSetError("basis outside ground set")
        if validate:
            report = check_basis_axioms(n, masks)
            if not report.ok:
                raise NotMatroidalError(report)
        elif not masks:
            raise NotMatroidalError(BasisAxiomReport(False, "B1", ("empty basis family",)))
        self.n = n
        self.bases = tuple(masks)
        self._rank = masks[0].bit_count()

    @property
    def rank(self) -> int:
        return self._rank

    def basis_sets(self) -> list[tuple[int, ...]]:
        return [members_of(b) for b in self.bases]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matroid) and self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"

    # -- rank/independence machinery --------------------------------------

    def rank_of(self, subset: int | Iterable[int]) -> int:
        mask = subset if isinstance(subset, int) else mask_of(subset, self.n)
        return max((b & mask).bit_count() for b in self.bases)

    def is_independent(self, subset: int | Iterable[int]) -> bool:
        mask = subset if isinstance(subset, int) else mask_of(subset, self.n)
        return self.rank_of(mask) == mask.bit_count()

    def independent_sets(self) -> set[int]:
        out: set[int] = set()
        for b in self.bases:
            m = b
            # all subsets of b
            sub = m
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & m
        return out

    def closure(self, subset: int | Iterable[int]) -> int:
        mask = subset if isinstance(subset, int) else mask_of(subset, self.n)
        r = self.rank_of(mask)
        out = mask
        for e in range(self.n):
            bit = 1 << e
            if not mask & bit and self.rank_of(mask | bit) == r:
                out |= bit
        return out

    def loops(self) -> int:
        all_b = 0
        for b in self.bases:
            all_b |= b
        return ((1 << self.n) - 1) ^ all_b

    def coloops(self) -> int:
        every = (1 << self.n) - 1
        for b in self.bases:
            every &= b
        return every

    def fundamental_circuit(self, e: int, basis: int) -> int:
        """Unique circuit inside basis + e, for e outside the basis."""
        bit = 1 << e
        if basis | bit == basis or basis not in set(self.bases):
            raise ValueError("need a basis and an element outside it")
        circ = bit
        bset = set(self.bases)
        m = basis
        while m:
            jbit = m & -m
            m ^= jbit
            if (basis ^ jbit) | bit in bset:
                circ |= jbit
        return circ

    # -- constructions -----------------------------------------------------

    def dual(self) -> "Matroid":
        full = (1 << self.n) - 1
        return Matroid(self.n, [full ^ b for b in self.bases], validate=False)

    def delete(self, subset: int | Iterable[int]) -> "Matroid":
        """Restriction to the complement, ground set re-indexed ascending."""
        mask = subset if isinstance(subset, int) else mask_of(subset, self.n)
        keep = [e for e in range(self.n) if not mask & (1 << e)]
        keep_mask = mask_of(keep, self.n)
        r = self.rank_of(keep_mask)
        pos = {e: i for i, e in enumerate(keep)}
        new_bases = set()
        for cand in itertools.combinations(keep, r):
            cm = mask_of(cand, self.n)
            if self.is_independent(cm):
                new_bases.add(sum(1 << pos[e] for e in cand))
        return Matroid(len(keep), new_bases, validate=False)

    def contract(self, subset: int | Iterable[int]) -> "Matroid":
        """Contract a set (via a maximal independent subset), re-indexed."""
        mask = subset if isinstance(subset, int) else mask_of(subset, self.n)
        # greedy maximal independent subset of the contracted set
        ind = 0
        for e in members_of(mask):
            if self.is_independent(ind | (1 << e)):
                ind |= 1 << e
        keep = [e for e in range(self.n) if not mask & (1 << e)]
        pos = {e: i for i, e in enumerate(keep)}
        k = ind.bit_count()
        new_bases = set()
        for b in self.bases:
            if b & ind == ind and not (b & mask & ~ind):
                new_bases.add(sum(1 << pos[e] for e in members_of(b ^ ind)))
        if not new_bases:
            # contracted set not inside any basis: extend ind to a basis first
            r = self.rank - k
            for cand in itertools.combinations(keep, r):
                cm = mask_of(cand, self.n)
                if self.rank_of(cm | ind) == r + k:
                    new_bases.add(sum(1 << pos[e] for e in cand))
        return Matroid(len(keep), new_bases, validate=False)

    def minor(self, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> "Matroid":
        dmask = mask_of(delete, self.n)
        cmask = mask_of(contract, self.n)
        if dmask & cmask:
            raise ValueError("delete and contract sets overlap")
        contracted = self.contract(cmask)
        removed = members_of(cmask)
        remap = [e for e in range(self.n) if e not in removed]
        new_delete = [remap.index(e) for e in members_of(dmask)]
        return contracted.delete(new_delete)

    def relax(self, subset: Iterable[int]) -> "Matroid":
        """Add one circuit-hyperplane as a new basis."""
        mask = mask_of(subset, self.n)
        if mask.bit_count() != self.rank:
            raise ValueError("relaxation candidate has the wrong cardinality")
        if mask in set(self.bases):
            raise ValueError("candidate is already a basis")
        cand = list(self.bases) + [mask]
        report = check_basis_axioms(self.n, cand)
        if not report.ok:
            raise NotMatroidalError(report)
        return Matroid(self.n, cand, validate=False)

    def free_extension(self) -> "Matroid":
        """Add element n freely: new bases are old ones plus I + {n} for
        independent I of size rank-1."""
        bit = 1 << self.n
        new_bases = set(self.bases)
        for b in self.bases:
            m = b
            while m:
                low = m & -m
                m ^= low
                new_bases.add((b ^ low) | bit)
        return Matroid(self.n + 1, new_bases, validate=False)

    def truncation_bases(self, flat: int | Iterable[int]) -> set[int]:
        """Bases of the principal truncation by a set: B - f for f in B & F."""
        fmask = flat if isinstance(flat, int) else mask_of(flat, self.n)
        out = set()
        for b in self.bases:
            m = b & fmask
            while m:
                low = m & -m
                m ^= low
                out.add(b ^ low)
        return out

    def cotruncation_bases(self, dset: int | Iterable[int]) -> set[int]:
        """Bases of the principal cotruncation by a set: B + d for d outside B."""
        dmask = dset if isinstance(dset, int) else mask_of(dset, self.n)
        out = set()
        for b in self.bases:
            m = dmask & ~b
            while m:
                low = m & -m
                m ^= low
                out.add(b | low)
        return out

    # -- generating polynomials --------------------------------------------

    def basis_polynomial(self) -> MultiAffinePolynomial:
        return MultiAffinePolynomial(self.n, {b: 1.0 for b in self.bases})

    def independent_set_polynomial(self) -> MultiAffinePolynomial:
        return MultiAffinePolynomial(self.n, {s: 1.0 for s in self.independent_sets()})


def verify_basis_axioms(n: int, bases: Iterable[Iterable[int] | int]) -> BasisAxiomReport:
    """Public axiom check on raw subsets (B1 and exhaustive B2)."""
    masks = [b if isinstance(b, int) else mask_of(b, n) for b in bases]
    return check_basis_axioms(n, masks)


def matroid_dual(M: Matroid) -> Matroid:
    return M.dual()


def minor(M: Matroid, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> Matroid:
    return M.minor(delete, contract)


def direct_sum(M: Matroid, N: Matroid) -> Matroid:
    """Ground sets concatenated: N's elements shifted by M.n."""
    bases = [bm | (bn << M.n) for bm in M.bases for bn in N.bases]
    return Matroid(M.n + N.n, bases, validate=False)


class ConnectionPreconditionError(ValueError):
    """A connection precondition (loop/coloop restriction) fails."""


def parallel_connection_m(M: Matroid, N: Matroid, e: int) -> Matroid:
    """Parallel connection along the shared element e (index e in both).

    Element layout matches connection_index_map.  Requires e not to be a
    loop in at least one operand.
    """
    if not (0 <= e < M.n and e < N.n):
        raise GroundSetError("shared element outside a ground set")
    if (M.loops() & (1 << e)) and (N.loops() & (1 << e)):
        raise ConnectionPreconditionError("shared element is a loop on both sides")
    qmap = connection_index_map(M.n, N.n, e)
    ebit = 1 << e

    def lift(b):
        return sum(1 << qmap[j] for j in members_of(b))

    bases = set()
    for b1 in M.bases:
        for b2 in N.bases:
            l2 = lift(b2)
            in1, in2 = bool(b1 & ebit), bool(b2 & ebit)
            if in1 and in2:
                bases.add(b1 | l2)
            elif in1 != in2:
                bases.add((b1 | l2) & ~ebit)
    return Matroid(M.n + N.n - 1, bases, validate=False)


def series_connection_m(M: Matroid, N: Matroid, e: int) -> Matroid:
    """Series connection along e; requires e not a coloop on both sides."""
    if not (0 <= e < M.n and e < N.n):
        raise GroundSetError("shared element outside a ground set")
    if (M.coloops() & (1 << e)) and (N.coloops() & (1 << e)):
        raise ConnectionPreconditionError("shared element is a coloop on both sides")
    qmap = connection_index_map(M.n, N.n, e)
    ebit = 1 << e

    def lift(b):
        return sum(1 << qmap[j] for j in members_of(b))

    bases = set()
    for b1 in M.bases:
        for b2 in N.bases:
            l2 = lift(b2)
            in1, in2 = bool(b1 & ebit), bool(b2 & ebit)
            if not in1 and not in2:
                bases.add(b1 | l2)
            elif in1 != in2:
                bases.add(b1 | l2)
    return Matroid(M.n + N.n - 1, bases, validate=False)


def two_sum_m(M: Matroid, N: Matroid, e: int) -> Matroid:
    """Parallel connection with the shared element deleted afterwards."""
    bit = 1 << e
    if M.loops() & bit or M.coloops() & bit or N.loops() & bit or N.coloops() & bit:
        raise ConnectionPreconditionError("2-sum needs e to be neither a loop nor a coloop on either side")
    return parallel_connection_m(M, N, e).delete([e])


@dataclass(frozen=True)
class RankDeficiency:
    """Union did not reach rank(M) + rank(N): no disjoint basis pair exists."""

    rank_m: int
    rank_n: int
    achieved: int


def matroid_union_fullrank(M: Matroid, N: Matroid):
    """Union with bases B1 | B2 over disjoint pairs, or a RankDeficiency."""
    if M.n != N.n:
        raise GroundSetError("union needs a common ground set")
    bases = {b1 | b2 for b1 in M.bases for b2 in N.bases if not b1 & b2}
    if not bases:
        achieved = max((b1 | b2).bit_count() for b1 in M.bases for b2 in N.bases)
        return RankDeficiency(M.rank, N.rank, achieved)
    return Matroid(M.n, bases, validate=False)


def support_matroid(P: MultiAffinePolynomial) -> Matroid:
    """Matroid whose bases are the support of a homogeneous multiaffine P.

    Raises NotMatroidalError (with the violating exchange) when the support
    fails the basis axioms, and ValueError when P is zero or inhomogeneous.
    """
    if P.is_zero():
        raise ValueError("zero polynomial has no support matroid")
    if not P.is_homogeneous():
        raise ValueError("support matroid needs a homogeneous polynomial")
    report = check_basis_axioms(P.n, P.support())
    if not report.ok:
        raise NotMatroidalError(report)
    return Matroid(P.n, P.support(), validate=False)


def exchangeable(S: Iterable[Sequence[int]], m: Sequence[int], mp: Sequence[int]) -> bool:
    """Multi-index exchange: every surplus of m over mp can move one step
    toward mp while staying inside S."""
    sset = {tuple(v) for v in S}
    m = tuple(m)
    mp = tuple(mp)
    if m not in sset or mp not in sset:
        raise ValueError("both multi-indices must belong to the family")
    n = len(m)
    for e in range(n):
        if m[e] > mp[e]:
            ok = False
            for f in range(n):
                if m[f] < mp[f]:
                    cand = list(m)
                    cand[e] -= 1
                    cand[f] += 1
                    if tuple(cand) in sset:
                        ok = True
                        break
            if not ok:
                return False
    return True


def constant_sum_jump_check(S: Iterable[Sequence[int]], p: Sequence[int] | None = None) -> bool:
    """Constant-sum jump-system test: exchangeability of every pair in S and
    of every reflected pair p - m in the reflected family."""
    fam = [tuple(v) for v in S]
    if not fam:
        raise ValueError("empty family")
    sums = {sum(v) for v in fam}
    if len(sums) != 1:
        raise ValueError("family does not have constant sum")
    n = len(fam[0])
    if p is None:
        p = tuple(max(v[e] for v in fam) for e in range(n))
    refl = [tuple(pe - ve for pe, ve in zip(p, v)) for v in fam]
    for a in fam:
        for b in fam:
            if not exchangeable(fam, a, b):
                return False
    for a in refl:
        for b in refl:
            if not exchangeable(refl, a, b):
                return False
    return True


def connected(M: Matroid) -> bool:
    """Connectivity via the basis exchange graph on any fixed basis.

    Conventions: a one-element matroid is connected; a matroid with a loop,
    or of rank 0 on more than one element, is disconnected.
    """
    if M.n <= 1:
        return True
    if M.loops() or M.rank == 0:
        return False
    basis = M.bases[0]
    adj: dict[int, set[int]] = {e: set() for e in range(M.n)}
    for i in range(M.n):
        if basis & (1 << i):
            continue
        circ = M.fundamental_circuit(i, basis)
        for j in members_of(circ ^ (1 << i)):
            adj[i].add(j)
            adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == M.n


# -- transversal and graphic constructors ----------------------------------


@dataclass(frozen=True)
class Presentation:
    """Ordered set family A_j over the ground set 0..n-1 (bitmasks)."""

    n: int
    sets: tuple[int, ...]

    @classmethod
    def from_sets(cls, n: int, sets: Sequence[Iterable[int]]) -> "Presentation":
        return cls(n, tuple(mask_of(s, n) for s in sets))

    def set_members(self) -> list[tuple[int, ...]]:
        return [members_of(s) for s in self.sets]


def _match_subset(subset: Sequence[int], sets: Sequence[int]) -> bool:
    """Kuhn's augmenting-path test: can the subset be matched into the family?"""
    match_of_set: dict[int, int] = {}

    def try_augment(elem: int, seen: set[int]) -> bool:
        for j, sj in enumerate(sets):
            if j in seen or not sj & (1 << elem):
                continue
            seen.add(j)
            if j not in match_of_set or try_augment(match_of_set[j], seen):
                match_of_set[j] = elem
                return True
        return False

    for e in subset:
        if not try_augment(e, set()):
            return False
    return True


def transversal_matroid(pres: Presentation) -> Matroid:
    """Matroid of subsets matchable into the presentation's set family."""
    sets = list(pres.sets)
    # rank = maximum matching on the full ground set
    match_of_set: dict[int, int] = {}

    def try_augment(elem, seen):
        for j, sj in enumerate(sets):
            if j in seen or not sj & (1 << elem):
                continue
            seen.add(j)
            if j not in match_of_set or try_augment(match_of_set[j], seen):
                match_of_set[j] = elem
                return True
        return False

    rank = sum(1 for e in range(pres.n) if try_augment(e, set()))
    if rank == 0:
        return Matroid(pres.n, [0], validate=False)
    bases = [
        mask_of(cand, pres.n)
        for cand in itertools.combinations(range(pres.n), rank)
        if _match_subset(cand, sets)
    ]
    return Matroid(pres.n, bases, validate=False)


@dataclass(frozen=True)
class Graph:
    """Finite multigraph on vertices 0..nv-1; loops allowed unless noted."""

    nv: int
    edges: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    @classmethod
    def from_edges(cls, nv: int, edges: Sequence[Sequence[int]]) -> "Graph":
        out = []
        for u, v in edges:
            if not (0 <= u < nv and 0 <= v < nv):
                raise ValueError(f"edge ({u},{v}) outside vertex range")
            out.append((u, v))
        return cls(nv, tuple(out))

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)


def complete_graph(nv: int) -> Graph:
    return Graph.from_edges(nv, list(itertools.combinations(range(nv), 2)))


def _spanning_forest_size(nv: int, edges: Sequence[tuple[int, int]]) -> int:
    parent = list(range(nv))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    count = 0
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count += 1
    return count


def graphic_matroid(G: Graph) -> Matroid:
    """Cycle matroid: bases are the maximal spanning forests, enumerated."""
    m = len(G.edges)
    r = _spanning_forest_size(G.nv, G.edges)
    if r == 0:
        return Matroid(m, [0], validate=False)
    bases = []
    for cand in itertools.combinations(range(m), r):
        sel = [G.edges[i] for i in cand]
        if _spanning_forest_size(G.nv, sel) == r:
            bases.append(sum(1 << i for i in cand))
    return Matroid(m, bases, validate=False)
