"""Sparse multiaffine and multi-index polynomial algebra over a finite ground set.

Ground-set elements are the integers 0..n-1 (n <= 63) and multiaffine
monomials are stored as single-word bitmasks.  All construction operations
use exact complex ring arithmetic on the stored coefficients: no epsilon
pruning, so structural identities (duality involution, deletion/contraction
duality, convolution bilinearity, ...) hold coefficientwise exactly.
"""

from __future__ import annotations

import cmath
import itertools
import math
from typing import Iterable, Mapping, Sequence

MAX_GROUND = 63


class GroundSetError(ValueError):
    """Ground set too large, or an element index out of range."""


def mask_of(members: Iterable[int], n: int) -> int:
    """Bitmask of a subset of 0..n-1."""
    m = 0
    for e in members:
        if not 0 <= e < n:
            raise GroundSetError(f"element {e} outside ground set of size {n}")
        m |= 1 << e
    return m


def members_of(mask: int) -> tuple[int, ...]:
    """Sorted elements of a subset bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _check_ground(n: int) -> None:
    if not 0 <= n <= MAX_GROUND:
        raise GroundSetError(f"ground set size {n} not in 0..{MAX_GROUND}")


def _check_coeff(c: complex) -> complex:
    c = complex(c)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ValueError("coefficients must be finite")
    return c


class MultiAffinePolynomial:
    """P(x) = sum over subsets S of a_S * x^S, sparse with exact-zero pruning."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[int, complex] | Iterable[tuple[int, complex]] = ()):
        _check_ground(n)
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[int, complex] = {}
        full = (1 << n) - 1
        for mask, c in items:
            if mask & ~full:
                raise GroundSetError(f"subset {bin(mask)} outside ground set of size {n}")
            c = _check_coeff(c)
            if c != 0:
                d[mask] = d.get(mask, 0) + c
                if d[mask] == 0:
                    del d[mask]
        self.n = n
        self._terms = d

    @classmethod
    def from_subsets(cls, n: int, terms: Mapping[Iterable[int], complex]) -> "MultiAffinePolynomial":
        return cls(n, {mask_of(s, n): c for s, c in terms.items()})

    @classmethod
    def zero(cls, n: int) -> "MultiAffinePolynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "MultiAffinePolynomial":
        return cls(n, {0: 1.0})

    # -- basic accessors -------------------------------------------------

    def terms(self) -> list[tuple[int, complex]]:
        """Term list as (subset mask, coefficient), sorted by mask."""
        return sorted(self._terms.items())

    def coeff(self, subset: int | Iterable[int]) -> complex:
        mask = subset if isinstance(subset, int) else mask_of(subset, self.n)
        return self._terms.get(mask, 0j)

    def support(self) -> frozenset[int]:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(m.bit_count() for m in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {m.bit_count() for m in self._terms}
        return len(degs) <= 1

    def coeff_abs_sum(self) -> float:
        return sum(abs(c) for c in self._terms.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiAffinePolynomial)
            and self.n == other.n
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        parts = [f"{c!r}*x{members_of(m)}" if m else f"{c!r}" for m, c in self.terms()]
        body = " + ".join(parts) if parts else "0"
        return f"MultiAffinePolynomial(n={self.n}: {body})"

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "MultiAffinePolynomial") -> "MultiAffinePolynomial":
        if self.n != other.n:
            raise GroundSetError("ground-set mismatch in +")
        d = dict(self._terms)
        for m, c in other._terms.items():
            d[m] = d.get(m, 0) + c
        return MultiAffinePolynomial(self.n, d)

    def __sub__(self, other: "MultiAffinePolynomial") -> "MultiAffinePolynomial":
        return self + (-1) * other

    def __rmul__(self, scalar: complex) -> "MultiAffinePolynomial":
        return MultiAffinePolynomial(self.n, {m: scalar * c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiAffinePolynomial):
            return self.to_general() * other.to_general()
        if isinstance(other, GeneralPolynomial):
            return self.to_general() * other
        return self.__rmul__(other)

    # -- evaluation ------------------------------------------------------

    def evaluate(self, x: Sequence[complex]) -> complex:
        """Exact term-by-term evaluation at the point x (length n)."""
        if len(x) != self.n:
            raise GroundSetError(f"point length {len(x)} != ground set size {self.n}")
        total = 0j
        for mask, c in sorted(self._terms.items()):
            p = c
            m = mask
            while m:
                low = m & -m
                p *= x[low.bit_length() - 1]
                m ^= low
            total += p
        return total

    # -- the half-plane-preserving unary operations ----------------------

    def delete(self, e: int) -> "MultiAffinePolynomial":
        """Set x_e = 0 and re-index the ground set to 0..n-2."""
        self._check_element(e)
        lo = (1 << e) - 1
        d = {}
        for m, c in self._terms.items():
            if not m & (1 << e):
                d[(m & lo) | ((m >> (e + 1)) << e)] = c
        return MultiAffinePolynomial(self.n - 1, d)

    def contract(self, e: int) -> "MultiAffinePolynomial":
        """d/dx_e, re-indexed to the ground set 0..n-2 (requires affinity in e)."""
        self._check_element(e)
        lo = (1 << e) - 1
        d = {}
        for m, c in self._terms.items():
            if m & (1 << e):
                m ^= 1 << e
                d[(m & lo) | ((m >> (e + 1)) << e)] = c
        return MultiAffinePolynomial(self.n - 1, d)

    def derivative(self, e: int) -> "MultiAffinePolynomial":
        """d/dx_e on the *same* ground set (element e becomes a dummy)."""
        self._check_element(e)
        bit = 1 << e
        return MultiAffinePolynomial(self.n, {m ^ bit: c for m, c in self._terms.items() if m & bit})

    def set_zero(self, e: int) -> "MultiAffinePolynomial":
        """x_e = 0 on the same ground set."""
        self._check_element(e)
        bit = 1 << e
        return MultiAffinePolynomial(self.n, {m: c for m, c in self._terms.items() if not m & bit})

    def dual(self) -> "MultiAffinePolynomial":
        """P*(x) = x^E P(1/x): complement every subset."""
        full = (1 << self.n) - 1
        return MultiAffinePolynomial(self.n, {full ^ m: c for m, c in self._terms.items()})

    def is_loop(self, e: int) -> bool:
        """True when dP/dx_e is identically zero."""
        self._check_element(e)
        return not any(m & (1 << e) for m in self._terms)

    def is_coloop(self, e: int) -> bool:
        """True when P vanishes at x_e = 0."""
        self._check_element(e)
        return all(m & (1 << e) for m in self._terms)

    def embed(self, n: int, offset: int = 0) -> "MultiAffinePolynomial":
        """Same polynomial on a larger ground set, elements shifted by offset."""
        _check_ground(n)
        if offset < 0 or self.n + offset > n:
            raise GroundSetError("embedding does not fit")
        return MultiAffinePolynomial(n, {m << offset: c for m, c in self._terms.items()})

    def to_general(self) -> "GeneralPolynomial":
        d = {}
        for m, c in self._terms.items():
            expo = [0] * self.n
            for e in members_of(m):
                expo[e] = 1
            d[tuple(expo)] = c
        return GeneralPolynomial(self.n, d)

    def _check_element(self, e: int) -> None:
        if not 0 <= e < self.n:
            raise GroundSetError(f"element {e} outside ground set of size {self.n}")


class GeneralPolynomial:
    """P(x) = sum over multi-indices m of a_m x^m (exponents not restricted)."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], complex] | Iterable = ()):
        _check_ground(n)
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[tuple[int, ...], complex] = {}
        for expo, c in items:
            expo = tuple(int(k) for k in expo)
            if len(expo) != n or any(k < 0 for k in expo):
                raise GroundSetError(f"bad multi-index {expo} for ground set of size {n}")
            c = _check_coeff(c)
            if c != 0:
                d[expo] = d.get(expo, 0) + c
                if d[expo] == 0:
                    del d[expo]
        self.n = n
        self._terms = d

    @classmethod
    def univariate(cls, coeffs: Sequence[complex]) -> "GeneralPolynomial":
        """Polynomial in one variable from ascending coefficients."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    def terms(self) -> list[tuple[tuple[int, ...], complex]]:
        return sorted(self._terms.items())

    def coeff(self, expo: Sequence[int]) -> complex:
        return self._terms.get(tuple(expo), 0j)

    def support(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def degree_in(self, e: int) -> int:
        if not self._terms:
            return 0
        return max(m[e] for m in self._terms)

    def is_multiaffine(self) -> bool:
        return all(all(k <= 1 for k in m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GeneralPolynomial)
            and self.n == other.n
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        parts = [f"{c!r}*x^{m}" for m, c in self.terms()]
        return f"GeneralPolynomial(n={self.n}: {' + '.join(parts) if parts else '0'})"

    def __add__(self, other: "GeneralPolynomial") -> "GeneralPolynomial":
        if self.n != other.n:
            raise GroundSetError("ground-set mismatch in +")
        d = dict(self._terms)
        for m, c in other._terms.items():
            d[m] = d.get(m, 0) + c
        return GeneralPolynomial(self.n, d)

    def __sub__(self, other: "GeneralPolynomial") -> "GeneralPolynomial":
        return self + (-1) * other

    def __rmul__(self, scalar: complex) -> "GeneralPolynomial":
        return GeneralPolynomial(self.n, {m: scalar * c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiAffinePolynomial):
            other = other.to_general()
        if not isinstance(other, GeneralPolynomial):
            return self.__rmul__(other)
        if self.n != other.n:
            raise GroundSetError("ground-set mismatch in *")
        d: dict[tuple[int, ...], complex] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = tuple(a + b for a, b in zip(ma, mb))
                d[m] = d.get(m, 0) + ca * cb
        return GeneralPolynomial(self.n, d)

    def evaluate(self, x: Sequence[complex]) -> complex:
        if len(x) != self.n:
            raise GroundSetError(f"point length {len(x)} != ground set size {self.n}")
        total = 0j
        for m, c in sorted(self._terms.items()):
            p = c
            for e, k in enumerate(m):
                if k:
                    p *= x[e] ** k
            total += p
        return total

    def as_multiaffine(self) -> MultiAffinePolynomial:
        if not self.is_multiaffine():
            raise ValueError("polynomial has an exponent above 1")
        d = {}
        for m, c in self._terms.items():
            d[sum(1 << e for e, k in enumerate(m) if k)] = c
        return MultiAffinePolynomial(self.n, d)


Polynomial = MultiAffinePolynomial | GeneralPolynomial


def evaluate(P: Polynomial, x: Sequence[complex]) -> complex:
    return P.evaluate(x)


def leading_part(P: GeneralPolynomial) -> GeneralPolynomial:
    """Terms of maximal total degree; zero maps to zero."""
    if P.is_zero():
        return P
    r = P.degree()
    return GeneralPolynomial(P.n, {m: c for m, c in P._terms.items() if sum(m) == r})


def delete(P: MultiAffinePolynomial, e: int) -> MultiAffinePolynomial:
    return P.delete(e)


def contract(P: MultiAffinePolynomial, e: int) -> MultiAffinePolynomial:
    return P.contract(e)


def dual(P: MultiAffinePolynomial) -> MultiAffinePolynomial:
    return P.dual()


def connection_index_map(n_p: int, n_q: int, e: int) -> dict[int, int]:
    """Where the elements of the second operand land in a connection.

    The shared element e keeps its index from the first operand; the second
    operand's remaining elements are appended after the first operand's in
    ascending original order.  Returns {q_element: joint_element}.
    """
    if not (0 <= e < n_p and e < n_q):
        raise GroundSetError("shared element outside a ground set")
    out = {e: e}
    nxt = n_p
    for j in range(n_q):
        if j != e:
            out[j] = nxt
            nxt += 1
    return out


def _lift_connection(P: MultiAffinePolynomial, Q: MultiAffinePolynomial, e: int):
    """Common ground set for a connection: P in place, Q relabeled."""
    n = P.n + Q.n - 1
    _check_ground(n)
    qmap = connection_index_map(P.n, Q.n, e)
    p_lift = MultiAffinePolynomial(n, dict(P._terms))
    q_lift = MultiAffinePolynomial(
        n,
        {sum(1 << qmap[j] for j in members_of(m)): c for m, c in Q._terms.items()},
    )
    return p_lift, q_lift, n


def _affine_split(P: MultiAffinePolynomial, e: int):
    """(P deleted at e, dP/dx_e), both on P's own ground set."""
    return P.set_zero(e), P.derivative(e)


def parallel_connection(P: MultiAffinePolynomial, Q: MultiAffinePolynomial, e: int) -> MultiAffinePolynomial:
    """P||Q = P\\e Q/e + P/e Q\\e + x_e P/e Q/e on the joint ground set.

    Both operands must be affine in the shared element e (index e in each);
    see connection_index_map for the relabeling convention.
    """
    p, q, n = _lift_connection(P, Q, e)
    pd, pc = _affine_split(p, e)
    qd, qc = _affine_split(q, e)
    xe = MultiAffinePolynomial(n, {1 << e: 1.0})
    out = (pd * qc) + (pc * qd) + (xe * pc * qc)
    return out.as_multiaffine()


def series_connection(P: MultiAffinePolynomial, Q: MultiAffinePolynomial, e: int) -> MultiAffinePolynomial:
    """P&Q = P\\e Q\\e + x_e P\\e Q/e + x_e P/e Q\\e on the joint ground set."""
    p, q, n = _lift_connection(P, Q, e)
    pd, pc = _affine_split(p, e)
    qd, qc = _affine_split(q, e)
    xe = MultiAffinePolynomial(n, {1 << e: 1.0})
    out = (pd * qd) + (xe * pd * qc) + (xe * pc * qd)
    return out.as_multiaffine()


def two_sum(P: MultiAffinePolynomial, Q: MultiAffinePolynomial, e: int) -> MultiAffinePolynomial:
    """Delete the shared element from the parallel connection."""
    return parallel_connection(P, Q, e).delete(e)


def _check_weights(P: MultiAffinePolynomial, weights: Sequence[float]) -> list[float]:
    w = [float(v) for v in weights]
    if len(w) != P.n:
        raise GroundSetError(f"weight vector length {len(w)} != ground set size {P.n}")
    if any(v < 0 or not math.isfinite(v) for v in w):
        raise ValueError("weights must be nonnegative and finite")
    return w


def principal_truncation(P: MultiAffinePolynomial, weights: Sequence[float]) -> MultiAffinePolynomial:
    """Weighted sum of partial derivatives, on the same ground set."""
    w = _check_weights(P, weights)
    out = MultiAffinePolynomial.zero(P.n)
    for e, lam in enumerate(w):
        if lam:
            out = out + lam * P.derivative(e)
    return out


def principal_extension(P: MultiAffinePolynomial, weights: Sequence[float]) -> MultiAffinePolynomial:
    """P + x_a * truncation, with the fresh element a appended as index n."""
    tr = principal_truncation(P, weights)
    n = P.n + 1
    _check_ground(n)
    d = {m: c for m, c in P._terms.items()}
    bit = 1 << P.n
    for m, c in tr._terms.items():
        d[m | bit] = d.get(m | bit, 0) + c
    return MultiAffinePolynomial(n, d)


def principal_cotruncation(P: MultiAffinePolynomial, weights: Sequence[float]) -> MultiAffinePolynomial:
    """Sum of lambda_e x_e P(..., x_e=0, ...), on the same ground set."""
    w = _check_weights(P, weights)
    d: dict[int, complex] = {}
    for e, lam in enumerate(w):
        if lam:
            bit = 1 << e
            for m, c in P._terms.items():
                if not m & bit:
                    d[m | bit] = d.get(m | bit, 0) + lam * c
    return MultiAffinePolynomial(P.n, d)


def principal_coextension(P: MultiAffinePolynomial, weights: Sequence[float]) -> MultiAffinePolynomial:
    """cotruncation + x_a * P, with the fresh element a appended as index n."""
    cotr = principal_cotruncation(P, weights)
    n = P.n + 1
    _check_ground(n)
    d = {m: c for m, c in cotr._terms.items()}
    bit = 1 << P.n
    for m, c in P._terms.items():
        d[m | bit] = d.get(m | bit, 0) + c
    return MultiAffinePolynomial(n, d)


def multiaffine_part(P: GeneralPolynomial, subset: Iterable[int] | None = None) -> GeneralPolynomial:
    """Keep terms whose exponent is at most 1 on every element of the subset."""
    A = set(range(P.n)) if subset is None else set(subset)
    for e in A:
        if not 0 <= e < P.n:
            raise GroundSetError(f"element {e} outside ground set of size {P.n}")
    return GeneralPolynomial(
        P.n, {m: c for m, c in P._terms.items() if all(m[e] <= 1 for e in A)}
    )


def fold_mod2(P: GeneralPolynomial, subset: Iterable[int] | None = None) -> GeneralPolynomial:
    """Reduce exponents mod 2 on the subset, combining like terms."""
    A = set(range(P.n)) if subset is None else set(subset)
    for e in A:
        if not 0 <= e < P.n:
            raise GroundSetError(f"element {e} outside ground set of size {P.n}")
    d: dict[tuple[int, ...], complex] = {}
    for m, c in P._terms.items():
        key = tuple(k % 2 if e in A else k for e, k in enumerate(m))
        d[key] = d.get(key, 0) + c
    return GeneralPolynomial(P.n, d)


def convolution(P: MultiAffinePolynomial, Q: MultiAffinePolynomial) -> MultiAffinePolynomial:
    """(P*Q)(x) = sum a_S b_T x^(S xor T), both on the same ground set."""
    if P.n != Q.n:
        raise GroundSetError("ground-set mismatch in convolution")
    d: dict[int, complex] = {}
    for ms, cs in P._terms.items():
        for mt, ct in Q._terms.items():
            m = ms ^ mt
            d[m] = d.get(m, 0) + cs * ct
    return MultiAffinePolynomial(P.n, d)


def coefficient_slices(P: GeneralPolynomial, e: int) -> list[GeneralPolynomial]:
    """P = sum_k slices[k] * x_e^k with the slices on the ground set minus e."""
    if not 0 <= e < P.n:
        raise GroundSetError(f"element {e} outside ground set of size {P.n}")
    M = P.degree_in(e)
    slices: list[dict[tuple[int, ...], complex]] = [{} for _ in range(M + 1)]
    for m, c in P._terms.items():
        rest = m[:e] + m[e + 1 :]
        slices[m[e]][rest] = slices[m[e]].get(rest, 0) + c
    return [GeneralPolynomial(P.n - 1, d) for d in slices]


def fettweis_transform(P: GeneralPolynomial, e: int, r: int, s: int) -> GeneralPolynomial:
    """Reweight the x_e-slices k=r..s by k!/(k-r)! * (M-k)!/(s-k)!."""
    M = P.degree_in(e)
    if not 0 <= r <= s <= M:
        raise ValueError(f"need 0 <= r <= s <= deg_e P = {M}")
    d: dict[tuple[int, ...], complex] = {}
    for m, c in P._terms.items():
        k = m[e]
        if r <= k <= s:
            w = (math.factorial(k) // math.factorial(k - r)) * (
                math.factorial(M - k) // math.factorial(s - k)
            )
            d[m] = d.get(m, 0) + w * c
    return GeneralPolynomial(P.n, d)


def apply_diff_operator(pairs: Sequence[tuple[GeneralPolynomial, GeneralPolynomial]]) -> GeneralPolynomial:
    """S(x) = sum_i P_i(d/dx) Q_i(x), all on a common ground set."""
    if not pairs:
        raise ValueError("need at least one (P, Q) pair")
    n = pairs[0][0].n
    d: dict[tuple[int, ...], complex] = {}
    for P, Q in pairs:
        if P.n != n or Q.n != n:
            raise GroundSetError("ground-set mismatch in differential operator")
        for mp, a in P._terms.items():
            for mq, b in Q._terms.items():
                if any(p > q for p, q in zip(mp, mq)):
                    continue
                w = 1
                for p, q in zip(mp, mq):
                    w *= math.factorial(q) // math.factorial(q - p)
                m = tuple(q - p for p, q in zip(mp, mq))
                d[m] = d.get(m, 0) + a * b * w
    return GeneralPolynomial(n, d)


def polarize(Q: GeneralPolynomial, degrees: Sequence[int]) -> MultiAffinePolynomial:
    """Multiaffine polynomial symmetric per block that restricts to Q on diagonals.

    Element e of Q becomes a block of degrees[e] fresh variables occupying the
    consecutive indices block_offset(e)..block_offset(e)+degrees[e]-1; the
    monomial x_e^k spreads over the k-subsets of the block with weight
    1/C(degrees[e], k).
    """
    if len(degrees) != Q.n:
        raise GroundSetError("one target degree per element required")
    for e in range(Q.n):
        if degrees[e] < Q.degree_in(e):
            raise ValueError(f"target degree {degrees[e]} below degree in element {e}")
    offsets = [0] * Q.n
    total = 0
    for e, ne in enumerate(degrees):
        offsets[e] = total
        total += ne
    _check_ground(total)
    d: dict[int, complex] = {}
    for m, c in Q._terms.items():
        weight = c
        per_block = []
        for e, k in enumerate(m):
            weight /= math.comb(degrees[e], k)
            per_block.append(
                [sum(1 << (offsets[e] + j) for j in combo)
                 for combo in itertools.combinations(range(degrees[e]), k)]
            )
        for picks in itertools.product(*per_block):
            mask = 0
            for p in picks:
                mask |= p
            d[mask] = d.get(mask, 0) + weight
    return MultiAffinePolynomial(total, d)


def polarization_blocks(degrees: Sequence[int]) -> list[tuple[int, ...]]:
    """Index blocks of the polarized ground set, one tuple per original element."""
    out = []
    off = 0
    for ne in degrees:
        out.append(tuple(range(off, off + ne)))
        off += ne
    return out


def diagonal_restriction(P: MultiAffinePolynomial) -> list[complex]:
    """Ascending coefficients of z -> P(z, z, ..., z)."""
    coeffs = [0j] * (P.n + 1)
    for m, c in P._terms.items():
        coeffs[m.bit_count()] += c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class Disc:
    """Closed disc |z - center| <= radius."""

    def __init__(self, center: complex, radius: float):
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        self.center = complex(center)
        self.radius = float(radius)

    def contains(self, z: complex, tol: float = 1e-9) -> bool:
        return abs(z - self.center) <= self.radius + tol

    def is_convex(self) -> bool:
        return True


class RightHalfPlane:
    """Closed right half-plane Re z >= 0."""

    def contains(self, z: complex, tol: float = 1e-9) -> bool:
        return z.real >= -tol

    def is_convex(self) -> bool:
        return True


class NoWitnessError(RuntimeError):
    """No diagonal witness found inside the region."""


def gws_witness(P: MultiAffinePolynomial, point: Sequence[complex], region, tol: float = 1e-9) -> complex:
    """A point xi in the region with P(xi, ..., xi) = P(point).

    P must be symmetric multiaffine (e.g. built by polarize on one block) and
    the points must lie in the region; a root of the diagonal polynomial is
    selected inside the (closed) region.
    """
    from .roots import univariate_roots

    target = P.evaluate(point)
    coeffs = diagonal_restriction(P)
    coeffs[0] -= target
    if all(c == 0 for c in coeffs):
        # diagonal is constant equal to the target: any region point works
        return complex(point[0])
    rs = univariate_roots(coeffs)
    best = None
    for z in rs.roots:
        if region.contains(z, tol):
            if best is None or abs(z) < abs(best):
                best = z
    if best is None:
        raise NoWitnessError(f"no diagonal root inside the region among {rs.roots}")
    return best


class PhaseResult:
    """Outcome of a same-phase check: theta when aligned, else a witness pair."""

    __slots__ = ("theta", "witness")

    def __init__(self, theta=None, witness=None):
        self.theta = theta
        self.witness = witness

    @property
    def ok(self) -> bool:
        return self.witness is None

    def __repr__(self):
        if self.ok:
            return f"PhaseResult(theta={self.theta})"
        return f"PhaseResult(witness={self.witness})"


def same_phase(P: Polynomial, tol: float = 1e-9) -> PhaseResult:
    """Check that all nonzero coefficients share one phase, within tol radians."""
    items = P.terms()
    if not items:
        return PhaseResult(theta=0.0)
    ref_key, ref = items[0]
    theta = cmath.phase(ref)
    for key, c in items[1:]:
        delta = cmath.phase(c) - theta
        delta = (delta + math.pi) % (2 * math.pi) - math.pi
        if abs(delta) > tol:
            return PhaseResult(witness=(ref_key, key))
    if theta <= -math.pi:
        theta += 2 * math.pi
    return PhaseResult(theta=theta)


def normalize_phase(P: Polynomial, tol: float = 1e-9):
    """Rotate P by a global phase so coefficients are nonnegative reals.

    Returns (rotated polynomial, theta).  Raises ValueError when the
    polynomial does not have the same-phase property within tol.
    """
    res = same_phase(P, tol)
    if not res.ok:
        raise ValueError(f"coefficients are not same-phase: witness {res.witness}")
    theta = res.theta
    rot = cmath.exp(-1j * theta)
    cls = type(P)
    return cls(P.n, {k: (rot * c).real for k, c in P.terms()}), theta


def affine_substitute(P: MultiAffinePolynomial, alpha: complex, beta: complex) -> MultiAffinePolynomial:
    """Substitute x_e = alpha + beta * y_e for every element, expanded exactly."""
    d: dict[int, complex] = {}
    for m, c in P._terms.items():
        elems = members_of(m)
        k = len(elems)
        for j in range(k + 1):
            w = c * (beta ** j) * (alpha ** (k - j))
            if w == 0:
                continue
            for combo in itertools.combinations(elems, j):
                mask = sum(1 << e for e in combo)
                d[mask] = d.get(mask, 0) + w
    return MultiAffinePolynomial(P.n, d)
