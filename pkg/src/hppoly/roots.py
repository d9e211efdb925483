"""Simultaneous (Weierstrass / Durand-Kerner) polynomial root finding.

Coefficients are ascending: p(z) = c[0] + c[1] z + ... + c[d] z^d.
Exact-zero leading and trailing coefficients are trimmed before iteration
(trailing zeros deflate to exact roots at the origin); there is no epsilon
trimming.  Initial guesses sit on a circle of radius 1 + max|c_k/c_d|
rotated by an irrational angle so symmetric root constellations cannot
stall the iteration.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

_ROTATION = 0.4  # radians; irrational fraction of a turn
_MAX_ITER = 2000
_TOL = 1e-13


class RootFindingError(RuntimeError):
    """The simultaneous iteration failed to converge within the cap."""


class RootSet:
    """Roots of a univariate polynomial plus the max |p(root)| residual."""

    __slots__ = ("roots", "residual")

    def __init__(self, roots: Sequence[complex], residual: float):
        self.roots = tuple(sorted(roots, key=lambda z: (round(z.real, 12), round(z.imag, 12))))
        self.residual = float(residual)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __repr__(self):
        return f"RootSet(roots={self.roots}, residual={self.residual:.3e})"


def _horner(coeffs_desc: np.ndarray, z: np.ndarray) -> np.ndarray:
    p = np.full_like(z, coeffs_desc[0])
    for c in coeffs_desc[1:]:
        p = p * z + c
    return p


def univariate_roots(coeffs: Sequence[complex], max_iter: int = _MAX_ITER, tol: float = _TOL) -> RootSet:
    """All roots of the polynomial with the given ascending coefficients.

    Deterministic for fixed coefficients.  Raises ValueError when every
    coefficient is zero and RootFindingError on non-convergence.
    """
    c = np.asarray(list(coeffs), dtype=complex)
    if c.size == 0 or not np.any(c != 0):
        raise ValueError("root finding needs a nonzero polynomial")
    # exact trimming: leading zeros reduce the degree, trailing zeros are roots at 0
    deg_top = int(np.max(np.nonzero(c != 0)))
    n_zero_roots = int(np.min(np.nonzero(c != 0)))
    c = c[n_zero_roots : deg_top + 1]
    d = c.size - 1
    zero_roots = [0j] * n_zero_roots
    if d == 0:
        return RootSet(zero_roots, 0.0)
    if d == 1:
        root = -c[0] / c[1]
        res = abs(c[0] + c[1] * root)
        return RootSet(zero_roots + [complex(root)], res)

    radius = 1.0 + float(np.max(np.abs(c[:-1] / c[-1])))
    angles = 2 * np.pi * np.arange(d) / d + _ROTATION
    z = radius * np.exp(1j * angles)
    cd = c[::-1]  # descending for Horner
    absc = np.abs(c)
    converged = False
    for _ in range(max_iter):
        p = _horner(cd, z)
        # backward error |p(z)| relative to sum_k |c_k| |z|^k; a few ulps is
        # the best any iterate can do, and it stays small at multiple roots
        # where the forward deltas stall at sqrt(eps)
        scale = np.polyval(absc[::-1], np.abs(z))
        if np.max(np.abs(p) / scale) < 1e-14 * d:
            converged = True
            break
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        denom = c[-1] * np.prod(diff, axis=1)
        delta = p / denom
        z = z - delta
        if np.max(np.abs(delta)) < tol * (1.0 + np.max(np.abs(z))):
            converged = True
            break
    if not converged:
        p = _horner(cd, z)
        scale = np.polyval(absc[::-1], np.abs(z))
        if np.max(np.abs(p) / scale) > 1e-10 * d:
            raise RootFindingError(f"no convergence after {max_iter} iterations (degree {d})")
    residual = float(np.max(np.abs(_horner(cd, z))))
    return RootSet(zero_roots + [complex(v) for v in z], residual)


def batch_roots(coeffs: np.ndarray, max_iter: int = 500, tol: float = 1e-14) -> np.ndarray:
    """Roots of many same-degree polynomials at once; shape (m, d+1) -> (m, d).

    Rows must have a nonzero leading coefficient (callers feed random
    positive data where this holds almost surely).  Used by the randomized
    half-plane searches where per-polynomial calls would dominate runtime.
    """
    c = np.asarray(coeffs, dtype=complex)
    m, w = c.shape
    d = w - 1
    if d == 0:
        return np.empty((m, 0), dtype=complex)
    lead = c[:, -1]
    if np.any(lead == 0):
        raise ValueError("batch rows must have nonzero leading coefficient")
    radius = 1.0 + np.max(np.abs(c[:, :-1] / lead[:, None]), axis=1)
    angles = 2 * np.pi * np.arange(d) / d + _ROTATION
    z = radius[:, None] * np.exp(1j * angles)[None, :]
    live = np.ones(m, dtype=bool)
    for _ in range(max_iter):
        zl = z[live]
        cl = c[live]
        acl = np.abs(cl)
        p = np.zeros_like(zl)
        scale = np.zeros(zl.shape, dtype=float)
        azl = np.abs(zl)
        for k in range(d, -1, -1):
            p = p * zl + cl[:, k][:, None]
            scale = scale * azl + acl[:, k][:, None]
        small = np.max(np.abs(p) / scale, axis=1) < 1e-14 * d
        diff = zl[:, :, None] - zl[:, None, :]
        idx = np.arange(d)
        diff[:, idx, idx] = 1.0
        denom = cl[:, -1][:, None] * np.prod(diff, axis=2)
        delta = np.where(small[:, None], 0.0, p / denom)
        z[live] = zl - delta
        moved = np.max(np.abs(delta), axis=1) > tol * (1.0 + np.max(azl, axis=1))
        sub = np.where(live)[0]
        live[sub[~moved]] = False
        if not live.any():
            break
    return z
