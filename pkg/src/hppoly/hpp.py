"""Half-plane (Hurwitz) property testing.

A polynomial has the half-plane property when it is nonvanishing whenever
every variable has strictly positive real part (or is identically zero).
This module provides randomized searches for counterexamples (ray method
for homogeneous polynomials, elementary pivot method for multiaffine ones,
and a shifted variant for general polynomials), the exact eigenvalue test
for the degree-2 case, structural necessary-condition probes, and
machine-checkable counterexample certificates.

All randomized searches are deterministic given (trials, seed): samples are
drawn in one fixed-layout block from a PCG64 generator, so trial i depends
only on the seed and its index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .poly import (
    GeneralPolynomial,
    GroundSetError,
    MultiAffinePolynomial,
    members_of,
    normalize_phase,
)
from .roots import batch_roots, univariate_roots


@dataclass(frozen=True)
class ToleranceConfig:
    """Classification tolerances for root and evaluation tests."""

    root_im_tol: float = 1e-7
    root_re_tol: float = 1e-9
    eval_tol: float = 1e-9
    eigen_tol: float = 1e-10

    def __post_init__(self):
        for name in ("root_im_tol", "root_re_tol", "eval_tol", "eigen_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class Counterexample:
    """Certificate that a polynomial vanishes somewhere in the open product
    of right half-planes.

    kind "ray": vectors a, b >= 0 whose pencil P(zeta*a + b) has a root off
    the closed negative real axis (stored in zeta).  kind "elementary": a
    point x with Re x_e > 0 for all e and |P(x)| ~ 0 (stored residual).
    """

    kind: str
    a: tuple[float, ...] | None = None
    b: tuple[float, ...] | None = None
    zeta: complex | None = None
    x: tuple[complex, ...] | None = None
    residual: float | None = None
    trial: int | None = None

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.kind == "ray":
            d["a"] = list(self.a)
            d["b"] = list(self.b)
            d["zeta"] = [self.zeta.real, self.zeta.imag]
        else:
            d["x"] = [[z.real, z.imag] for z in self.x]
            d["residual"] = self.residual
        if self.trial is not None:
            d["trial"] = self.trial
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Counterexample":
        if d["kind"] == "ray":
            return cls(
                kind="ray",
                a=tuple(d["a"]),
                b=tuple(d["b"]),
                zeta=complex(d["zeta"][0], d["zeta"][1]),
                trial=d.get("trial"),
            )
        return cls(
            kind="elementary",
            x=tuple(complex(re, im) for re, im in d["x"]),
            residual=d["residual"],
            trial=d.get("trial"),
        )


@dataclass(frozen=True)
class HppReport:
    """Result of a randomized half-plane search."""

    verdict: str  # "no-counterexample-found" | "counterexample"
    trials: int
    seed: int
    method: str
    hits: int = 0
    certificate: Counterexample | None = None

    def __post_init__(self):
        if (self.verdict == "counterexample") != (self.certificate is not None):
            raise ValueError("certificate present iff verdict is counterexample")

    def to_dict(self) -> dict:
        d = {
            "verdict": self.verdict,
            "trials": self.trials,
            "seed": self.seed,
            "method": self.method,
            "hits": self.hits,
        }
        if self.certificate is not None:
            d["certificate"] = self.certificate.to_dict()
        return d


# -- univariate ray tests ---------------------------------------------------


def ray_polynomial(P: MultiAffinePolynomial, a: Sequence[float], b: Sequence[float]) -> list[complex]:
    """Ascending coefficients of zeta -> P(zeta*a + b)."""
    if len(a) != P.n or len(b) != P.n:
        raise GroundSetError("direction vectors must match the ground set")
    out = [0j] * (max(P.degree(), 0) + 1)
    for mask, c in P.terms():
        cur = [c]
        for e in members_of(mask):
            nxt = [0j] * (len(cur) + 1)
            for k, v in enumerate(cur):
                nxt[k] += v * b[e]
                nxt[k + 1] += v * a[e]
            cur = nxt
        for k, v in enumerate(cur):
            out[k] += v
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _bad_root(roots, cfg: ToleranceConfig):
    """First root off the closed negative real axis, or None."""
    for z in roots:
        if abs(z.imag) > cfg.root_im_tol * (1.0 + abs(z)) or z.real > cfg.root_re_tol:
            return z
    return None


def ray_test_homogeneous(
    P: MultiAffinePolynomial,
    a: Sequence[float],
    b: Sequence[float],
    cfg: ToleranceConfig = DEFAULT_TOL,
) -> Counterexample | None:
    """Check that all roots of P(zeta*a + b) are real and nonpositive.

    P must be homogeneous and nonzero, a, b >= 0 with a + b > 0.  Returns
    None on pass, a ray certificate on failure.  A pencil that collapses to
    the zero polynomial is reported via ValueError.
    """
    if P.is_zero() or not P.is_homogeneous():
        raise ValueError("ray test needs a nonzero homogeneous polynomial")
    av = [float(v) for v in a]
    bv = [float(v) for v in b]
    if any(v < 0 for v in av + bv) or all(x + y == 0 for x, y in zip(av, bv)):
        raise ValueError("need a, b >= 0 with a + b > 0")
    coeffs = ray_polynomial(P, av, bv)
    if len(coeffs) == 1 and coeffs[0] == 0:
        raise ValueError("pencil polynomial is identically zero")
    roots = univariate_roots(coeffs)
    bad = _bad_root(roots, cfg)
    if bad is None:
        return None
    return Counterexample(kind="ray", a=tuple(av), b=tuple(bv), zeta=bad)


def _ray_batch_coeffs(P: MultiAffinePolynomial, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Coefficients of P(zeta*a + b) for many (a, b) rows at once."""
    r = P.degree()
    t = A.shape[0]
    out = np.zeros((t, r + 1), dtype=complex)
    for mask, c in P.terms():
        elems = members_of(mask)
        cur = np.zeros((t, len(elems) + 1), dtype=complex)
        cur[:, 0] = c
        for k, e in enumerate(elems):
            nxt = np.zeros_like(cur)
            nxt[:, : k + 1] += cur[:, : k + 1] * B[:, e][:, None]
            nxt[:, 1 : k + 2] += cur[:, : k + 1] * A[:, e][:, None]
            cur = nxt
        out[:, : len(elems) + 1] += cur
    return out


def hpp_random_rays(
    P: MultiAffinePolynomial,
    trials: int,
    seed: int = 0,
    cfg: ToleranceConfig = DEFAULT_TOL,
    batch: int = 20000,
) -> HppReport:
    """Randomized ray search: a, b uniform in [0,1]^n per trial.

    Stops at the first counterexample; hits counts offending trials seen in
    the final (partial) batch plus earlier ones, so reruns with one seed are
    reproducible.  For rate estimation over all trials use count_ray_hits.
    """
    if P.is_zero() or not P.is_homogeneous():
        raise ValueError("ray search needs a nonzero homogeneous polynomial")
    rng = np.random.default_rng(seed)
    done = 0
    hits = 0
    while done < trials:
        m = min(batch, trials - done)
        block = rng.random((m, 2, P.n))
        A, B = block[:, 0, :], block[:, 1, :]
        coeffs = _ray_batch_coeffs(P, A, B)
        roots = batch_roots(coeffs)
        bad = (np.abs(roots.imag) > cfg.root_im_tol * (1.0 + np.abs(roots))) | (
            roots.real > cfg.root_re_tol
        )
        bad_rows = np.where(bad.any(axis=1))[0]
        if bad_rows.size:
            i = int(bad_rows[0])
            hits += int(bad_rows.size)
            z = roots[i][bad[i]][0]
            cert = Counterexample(
                kind="ray",
                a=tuple(map(float, A[i])),
                b=tuple(map(float, B[i])),
                zeta=complex(z),
                trial=done + i,
            )
            return HppReport("counterexample", trials, seed, "rays", hits, cert)
        done += m
    return HppReport("no-counterexample-found", trials, seed, "rays", 0, None)


def count_ray_hits(
    P: MultiAffinePolynomial,
    trials: int,
    seed: int = 0,
    cfg: ToleranceConfig = DEFAULT_TOL,
    batch: int = 20000,
) -> int:
    """Number of offending trials among `trials` seeded ray samples."""
    rng = np.random.default_rng(seed)
    done = 0
    hits = 0
    while done < trials:
        m = min(batch, trials - done)
        block = rng.random((m, 2, P.n))
        coeffs = _ray_batch_coeffs(P, block[:, 0, :], block[:, 1, :])
        roots = batch_roots(coeffs)
        bad = (np.abs(roots.imag) > cfg.root_im_tol * (1.0 + np.abs(roots))) | (
            roots.real > cfg.root_re_tol
        )
        hits += int(bad.any(axis=1).sum())
        done += m
    return hits


# -- elementary pivot method -------------------------------------------------


def _pick_pivot(P: MultiAffinePolynomial, pivot: int | None) -> int:
    if pivot is None:
        pivot = P.n - 1
    if not P.is_loop(pivot) and not P.is_coloop(pivot):
        return pivot
    for e in reversed(range(P.n)):
        if not P.is_loop(e) and not P.is_coloop(e):
            return e
    # loops/coloops everywhere (e.g. a single monomial): keep the requested
    # pivot; a coloop pivot just solves to the x_e = 0 boundary every time
    return pivot


def _eval_many(P: MultiAffinePolynomial, X: np.ndarray) -> np.ndarray:
    """Evaluate at many points: X has one column per element."""
    out = np.zeros(X.shape[0], dtype=complex)
    for mask, c in P.terms():
        p = np.full(X.shape[0], c, dtype=complex)
        for e in members_of(mask):
            p = p * X[:, e]
        out += p
    return out


def hpp_random_elementary(
    P: MultiAffinePolynomial,
    trials: int,
    seed: int = 0,
    cfg: ToleranceConfig = DEFAULT_TOL,
    pivot: int | None = None,
    batch: int = 100000,
) -> HppReport:
    """Solve P = 0 for one coordinate at random points of the others.

    The non-pivot coordinates are uniform in (0,1) + (-1,1)i; a trial is a
    counterexample when the solved pivot coordinate has real part above
    eval_tol.  The pivot defaults to the last element, falling back to
    another element when that one is a loop or coloop.
    """
    if P.is_zero():
        raise ValueError("elementary search needs a nonzero polynomial")
    e = _pick_pivot(P, pivot)
    pdel = P.set_zero(e)
    pcon = P.derivative(e)
    if pdel.is_zero() and pcon.is_zero():
        raise ValueError("degenerate pivot: deletion and contraction both vanish")
    others = [f for f in range(P.n) if f != e]
    rng = np.random.default_rng(seed)
    done = 0
    hits = 0
    first: Counterexample | None = None
    while done < trials:
        m = min(batch, trials - done)
        block = rng.random((m, 2, P.n - 1))
        X = np.zeros((m, P.n), dtype=complex)
        X[:, others] = block[:, 0, :] + 1j * (2.0 * block[:, 1, :] - 1.0)
        num = _eval_many(pdel, X)
        den = _eval_many(pcon, X)
        with np.errstate(divide="ignore", invalid="ignore"):
            xe = -num / den
        good = np.isfinite(xe)
        bad_rows = np.where(good & (xe.real > cfg.eval_tol))[0]
        if bad_rows.size and first is None:
            i = int(bad_rows[0])
            X[i, e] = xe[i]
            res = abs(complex(_eval_many(P, X[i : i + 1])[0]))
            first = Counterexample(
                kind="elementary",
                x=tuple(complex(v) for v in X[i]),
                residual=res,
                trial=done + i,
            )
        hits += int(bad_rows.size)
        done += m
    if first is not None:
        return HppReport("counterexample", trials, seed, "elementary", hits, first)
    return HppReport("no-counterexample-found", trials, seed, "elementary", 0, None)


# -- shifted test for general polynomials -------------------------------------


def shifted_ray_polynomial(P: GeneralPolynomial, x: Sequence[float], y: Sequence[float]) -> list[complex]:
    """Ascending coefficients of zeta -> zeta^k P(zeta*x + y/zeta), k = deg P."""
    k = P.degree()
    if k < 0:
        raise ValueError("zero polynomial")
    # Laurent accumulation: offset index j stores the coefficient of zeta^(j-k)
    out = [0j] * (2 * k + 1)
    for m, c in P.terms():
        cur = {0: c}
        for e, me in enumerate(m):
            for _ in range(me):
                nxt: dict[int, complex] = {}
                for off, v in cur.items():
                    nxt[off + 1] = nxt.get(off + 1, 0) + v * x[e]
                    nxt[off - 1] = nxt.get(off - 1, 0) + v * y[e]
                cur = nxt
        for off, v in cur.items():
            out[off + k] += v
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def shifted_hpp_random(
    P: GeneralPolynomial,
    trials: int,
    seed: int = 0,
    cfg: ToleranceConfig = DEFAULT_TOL,
) -> HppReport:
    """Random x, y >= 0 test that all roots of zeta^k P(zeta x + y/zeta)
    lie in the closed left half-plane."""
    if P.is_zero():
        raise ValueError("shifted search needs a nonzero polynomial")
    if P.degree() == 0:
        return HppReport("no-counterexample-found", trials, seed, "shifted", 0, None)
    rng = np.random.default_rng(seed)
    for t in range(trials):
        block = rng.random((2, P.n))
        x, y = block[0], block[1]
        coeffs = shifted_ray_polynomial(P, x, y)
        if all(c == 0 for c in coeffs):
            continue
        roots = univariate_roots(coeffs)
        for z in roots:
            if z.real > cfg.root_re_tol * (1.0 + abs(z)):
                cert = Counterexample(
                    kind="ray", a=tuple(map(float, x)), b=tuple(map(float, y)),
                    zeta=complex(z), trial=t,
                )
                return HppReport("counterexample", trials, seed, "shifted", 1, cert)
    return HppReport("no-counterexample-found", trials, seed, "shifted", 0, None)


# -- exact degree-2 test -------------------------------------------------------


def jacobi_eigenvalues(A: np.ndarray, rel_tol: float = 1e-12, max_sweeps: int = 60):
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm is at most rel_tol * ||A||.
    Returns (eigenvalues sorted descending, off-diagonal norm, sweeps).
    """
    a = np.array(A, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("need a square matrix")
    if not np.allclose(a, a.T, atol=0, rtol=0):
        raise ValueError("need a symmetric matrix")
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    if norm == 0.0 or n == 1:
        return np.sort(np.diag(a))[::-1], 0.0, 0

    def offnorm():
        return math.sqrt(max(0.0, float(np.sum(a * a)) - float(np.sum(np.diag(a) ** 2))))

    sweeps = 0
    while offnorm() > rel_tol * norm and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                phi = 0.5 * math.atan2(2.0 * apq, a[q, q] - a[p, p])
                c, s = math.cos(phi), math.sin(phi)
                rp = c * a[p, :] - s * a[q, :]
                rq = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rp, rq
                cp = c * a[:, p] - s * a[:, q]
                cq = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = cp, cq
                a[p, q] = a[q, p] = 0.0
    return np.sort(np.diag(a))[::-1], offnorm(), sweeps


@dataclass(frozen=True)
class Rank2Result:
    hpp: bool
    lambda2: float
    eigenvalues: tuple[float, ...]


def rank2_exact(P, cfg: ToleranceConfig = DEFAULT_TOL) -> Rank2Result:
    """Exact half-plane decision for homogeneous degree-2 polynomials.

    Writes P = (1/2) z^T A z after a global phase normalization (the
    coefficients must then be nonnegative reals) and decides by the sign of
    the second-largest eigenvalue of A.
    """
    if P.is_zero():
        return Rank2Result(True, 0.0, ())
    if not P.is_homogeneous() or P.degree() != 2:
        raise ValueError("need a homogeneous degree-2 polynomial")
    Pn, _theta = normalize_phase(P)
    n = P.n
    A = np.zeros((n, n))
    if isinstance(Pn, MultiAffinePolynomial):
        for mask, c in Pn.terms():
            if c.real < -cfg.eval_tol:
                raise ValueError("negative coefficient after phase normalization")
            i, j = members_of(mask)
            A[i, j] = A[j, i] = c.real
    else:
        for m, c in Pn.terms():
            if c.real < -cfg.eval_tol:
                raise ValueError("negative coefficient after phase normalization")
            nz = [e for e, k in enumerate(m) if k]
            if len(nz) == 2:
                i, j = nz
                A[i, j] = A[j, i] = c.real
            else:
                (i,) = nz
                A[i, i] = 2.0 * c.real
    eig, _off, _sweeps = jacobi_eigenvalues(A)
    lam2 = float(eig[1]) if len(eig) > 1 else 0.0
    return Rank2Result(lam2 <= cfg.eigen_tol, lam2, tuple(float(v) for v in eig))


# -- structural probes ---------------------------------------------------------


@dataclass(frozen=True)
class LocalHppViolation:
    x: tuple[complex, ...]
    ratio: complex
    trial: int


def local_hpp_probe(
    P: MultiAffinePolynomial,
    e: int,
    trials: int,
    seed: int = 0,
    cfg: ToleranceConfig = DEFAULT_TOL,
) -> LocalHppViolation | None:
    """Sampled necessary condition Re(P\\e / P/e) >= 0 on the open product
    of half-planes in the other variables.  None means no violation found."""
    if P.is_loop(e) or P.is_coloop(e):
        raise ValueError("pivot element is a loop or coloop")
    pdel = P.set_zero(e)
    pcon = P.derivative(e)
    others = [f for f in range(P.n) if f != e]
    rng = np.random.default_rng(seed)
    batch = 20000
    done = 0
    while done < trials:
        m = min(batch, trials - done)
        block = rng.random((m, 2, P.n - 1))
        X = np.zeros((m, P.n), dtype=complex)
        X[:, others] = block[:, 0, :] + 1j * (2.0 * block[:, 1, :] - 1.0)
        num = _eval_many(pdel, X)
        den = _eval_many(pcon, X)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = num / den
        bad = np.isfinite(ratio) & (ratio.real < -cfg.eval_tol)
        rows = np.where(bad)[0]
        if rows.size:
            i = int(rows[0])
            return LocalHppViolation(
                x=tuple(complex(v) for v in X[i]), ratio=complex(ratio[i]), trial=done + i
            )
        done += m
    return None


@dataclass(frozen=True)
class SliceGapViolation:
    start: int
    gap: int


def fettweis_gap_check(P: GeneralPolynomial, e: int) -> SliceGapViolation | None:
    """Necessary condition on the x_e-slices: a run of two or more vanishing
    slices strictly between nonzero ones is impossible for a polynomial with
    the half-plane property.  None means the pattern is consistent."""
    from .poly import coefficient_slices

    slices = coefficient_slices(P, e)
    nz = [k for k, s in enumerate(slices) if not s.is_zero()]
    for lo, hi in zip(nz, nz[1:]):
        if hi - lo - 1 >= 2:
            return SliceGapViolation(start=lo, gap=hi - lo - 1)
    return None


# -- uniform-matroid reliability root locations --------------------------------


@dataclass(frozen=True)
class BrownColbournResult:
    h_coeffs: tuple[int, ...]
    h_roots: tuple[complex, ...]
    annulus_ok: bool
    i_roots: tuple[complex, ...]
    min_re_ok: bool  # every root of the truncated-binomial polynomial has Re >= -1/2


def brown_colbourn_uniform(r: int, n: int, tol: float = 1e-9) -> BrownColbournResult:
    """Root locations for the rank-r, n-element uniform reliability data.

    H(q) = sum_{l=0}^{r} C(n-r-1+l, l) q^l must have all roots in the
    annulus 1/(n-r) <= |q| <= r/(n-1); the truncated binomial polynomial
    I(z) = sum_{k=0}^{r} C(n,k) z^k then has all roots with Re z >= -1/2.
    """
    if not 0 <= r <= n - 1:
        raise ValueError("need 0 <= r <= n-1")
    h = [math.comb(n - r - 1 + ell, ell) for ell in range(r + 1)]
    if r == 0:
        return BrownColbournResult(tuple(h), (), True, (), True)
    h_roots = univariate_roots([complex(c) for c in h]).roots
    lo, hi = 1.0 / (n - r), r / (n - 1)
    annulus_ok = all(lo - tol <= abs(q) <= hi + tol for q in h_roots)
    i_coeffs = [complex(math.comb(n, k)) for k in range(r + 1)]
    i_roots = univariate_roots(i_coeffs).roots
    min_re_ok = all(z.real >= -0.5 - tol for z in i_roots)
    return BrownColbournResult(tuple(h), tuple(h_roots), annulus_ok, tuple(i_roots), min_re_ok)


# -- certificate verification ----------------------------------------------------


def counterexample_verify(
    P: MultiAffinePolynomial | GeneralPolynomial,
    cert: Counterexample,
    cfg: ToleranceConfig = DEFAULT_TOL,
) -> bool:
    """Independently re-check a counterexample certificate.

    Ray certificates are re-rooted from (a, b); elementary certificates are
    re-evaluated at x.  Malformed certificates raise ValueError.
    """
    if cert.kind == "ray":
        if cert.a is None or cert.b is None:
            raise ValueError("ray certificate needs a and b")
        if not isinstance(P, MultiAffinePolynomial):
            raise ValueError("ray certificates apply to multiaffine polynomials")
        coeffs = ray_polynomial(P, cert.a, cert.b)
        if all(c == 0 for c in coeffs):
            return False
        roots = univariate_roots(coeffs)
        return _bad_root(roots, cfg) is not None
    if cert.kind == "elementary":
        if cert.x is None:
            raise ValueError("elementary certificate needs the point x")
        if len(cert.x) != P.n:
            raise ValueError("certificate point has the wrong length")
        if any(z.real <= cfg.eval_tol for z in cert.x):
            return False
        value = P.evaluate(list(cert.x))
        if isinstance(P, MultiAffinePolynomial):
            scale = P.coeff_abs_sum()
        else:
            scale = sum(abs(c) for _m, c in P.terms())
        return abs(value) <= cfg.eval_tol * (1.0 + scale)
    raise ValueError(f"unknown certificate kind {cert.kind!r}")
