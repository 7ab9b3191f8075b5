"""Domination roots of exact integer polynomials.

The zero root is deflated exactly (its multiplicity is the domination
number). The remaining factor is split into square-free parts, and each part
is solved by Aberth-Ehrlich simultaneous iteration on its exact integer
coefficients in extended precision (gmpy2), followed by one Newton step per
root. Double-precision Horner is not usable here: family polynomials carry
coefficients near 1e17, so near |z| = 1 the cancellation wipes out every
significant digit.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import gmpy2
import numpy as np

from .poly import Polynomial, divide_exact, gcd, lowest_degree

DEFAULT_TOL = 1e-10
RESIDUAL_BOUND = 1e-6
REAL_THRESHOLD = 1e-8
MAX_ITER = 500
# Working precision (bits) of the iteration; coefficients up to ~1e18 stay exact.
PREC = 160
# Large prime for the fast square-free test.
_PRIME = (1 << 61) - 1


@dataclass
class RootSet:
    zero_multiplicity: int
    nonzero_roots: list[complex]
    residuals: list[float]
    converged: bool = True
    iterations: int = 0
    tol: float = DEFAULT_TOL
    multiplicities: list[int] = field(default_factory=list)

    @property
    def max_modulus(self) -> float:
        return max((abs(z) for z in self.nonzero_roots), default=0.0)


@dataclass
class RealRoots:
    zero_multiplicity: int
    nonzero: list[float]
    threshold: float
    converged: bool = True

    @property
    def distinct_count(self) -> int:
        """Distinct real roots, zero included when it is a root."""
        return len(set(round(r, 9) for r in self.nonzero)) + (1 if self.zero_multiplicity else 0)


def cauchy_radius(coeffs: list[int]) -> float:
    """Positive root of |a_n| r^n = sum_{i<n} |a_i| r^i; every root has modulus <= it."""
    n = len(coeffs) - 1
    lead = abs(coeffs[-1])
    logs = [(i, math.log(abs(c))) for i, c in enumerate(coeffs[:-1]) if c]
    if not logs:
        return 0.0
    log_lead = math.log(lead)

    def excess(log_r: float) -> float:
        # log(sum |a_i| r^i) - log(|a_n| r^n), computed stably
        vals = [la + i * log_r for i, la in logs]
        m = max(vals)
        return m + math.log(sum(math.exp(v - m) for v in vals)) - (log_lead + n * log_r)

    lo, hi = -50.0, 50.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0:
            lo = mid
        else:
            hi = mid
    return math.exp(hi)


def _gcd_mod_degree(a: list[int], b: list[int], p: int) -> int:
    """Degree of gcd(a, b) over GF(p); coefficient lists low-to-high."""
    def trim(v):
        v = [c % p for c in v]
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b):
            q = r[-1] * inv % p
            off = len(r) - len(b)
            for j, bj in enumerate(b):
                r[off + j] = (r[off + j] - q * bj) % p
            r = trim(r)
            if not r:
                break
        a, b = b, r
    return len(a) - 1


def squarefree_parts(q: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun decomposition: [(f_k, k)] with q = c * prod f_k**k, f_k square-free."""
    if q.degree < 1:
        return []
    dq = q.derivative()
    if q.leading % _PRIME and _gcd_mod_degree(list(q.coeffs), list(dq.coeffs), _PRIME) == 0:
        return [(q, 1)]
    parts = []
    a = gcd(q, dq)
    b = divide_exact(q, a) if a.degree > 0 else q
    c = divide_exact(dq, a) if a.degree > 0 else dq
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        f = gcd(b, d)
        if f.degree > 0:
            parts.append((f, k))
        b = divide_exact(b, f)
        c = divide_exact(d, f)
        d = c - b.derivative()
        k += 1
    return parts


def polygon_start(coeffs: list[int], offset: float = 0.4) -> list[complex]:
    """Starting points from the upper convex hull of (i, log|a_i|).

    Each hull edge from i to j contributes j - i points on a circle whose
    radius is the geometric mean root modulus that edge predicts.
    """
    n = len(coeffs) - 1
    pts = [(i, math.log(abs(c))) for i, c in enumerate(coeffs) if c]
    hull: list[tuple[int, float]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    out = []
    for (i, li), (j, lj) in zip(hull, hull[1:]):
        r = math.exp((li - lj) / (j - i))
        k = j - i
        out += [r * cmath.exp(1j * (2 * math.pi * t / k + 2 * math.pi * i / n + offset)) for t in range(k)]
    return out


def cauchy_start(coeffs: list[int], offset: float = 0.4) -> list[complex]:
    n = len(coeffs) - 1
    r = cauchy_radius(coeffs)
    return [r * cmath.exp(1j * (2 * math.pi * k / n + offset / n)) for k in range(n)]


def _horner2(a: list, z):
    """Value and derivative at z."""
    p = gmpy2.mpc(0)
    d = gmpy2.mpc(0)
    for c in a:
        d = d * z + p
        p = p * z + c
    return p, d


def _aberth(coeffs: list[int], z0: list[complex], tol: float, max_iter: int) -> tuple[list, bool, int]:
    """Jacobi-style Aberth sweeps on exact coefficients in the current gmpy2 precision."""
    a = [gmpy2.mpc(c) for c in reversed(coeffs)]
    z = [gmpy2.mpc(v) for v in z0]
    n = len(z)
    it = 0
    for it in range(1, max_iter + 1):
        vals = [_horner2(a, zi) for zi in z]
        ws = []
        for i, zi in enumerate(z):
            p, d = vals[i]
            if p == 0:
                ws.append(gmpy2.mpc(0))
                continue
            ratio = p / d
            s = gmpy2.mpc(0)
            for j in range(n):
                if j != i:
                    s += 1 / (zi - z[j])
            ws.append(ratio / (1 - ratio * s))
        z = [zi - wi for zi, wi in zip(z, ws)]
        if all(abs(w) < tol * max(1, abs(zi)) for w, zi in zip(ws, z)):
            return z, True, it
    return z, False, it


def _newton_polish(coeffs: list[int], z: list) -> list:
    a = [gmpy2.mpc(c) for c in reversed(coeffs)]
    out = []
    for zi in z:
        p, d = _horner2(a, zi)
        out.append(zi - p / d if d != 0 else zi)
    return out


def _residual(coeffs: list[int], z) -> float:
    """|q(z)| / sum |q_i| |z|^i."""
    val = gmpy2.mpc(0)
    scale = gmpy2.mpfr(0)
    r = abs(z)
    for c in reversed(coeffs):
        val = val * z + c
        scale = scale * r + abs(c)
    return float(abs(val) / scale)


def _solve_squarefree(f: Polynomial, tol: float, max_iter: int, start: str, seed: int | None):
    coeffs = list(f.coeffs)
    if f.degree == 1:
        return [gmpy2.mpc(gmpy2.mpq(-coeffs[0], coeffs[1]))], True, 0
    offset = 0.4
    if seed is not None:
        offset += float(np.random.default_rng(seed).uniform(0, 0.5))
    z0 = polygon_start(coeffs, offset) if start == "polygon" else cauchy_start(coeffs, offset)
    z, ok, it = _aberth(coeffs, z0, tol, max_iter)
    return _newton_polish(coeffs, z), ok, it


def find_roots(
    p: Polynomial,
    tol: float = DEFAULT_TOL,
    max_iter: int = MAX_ITER,
    seed: int | None = None,
    residual_bound: float = RESIDUAL_BOUND,
    start: str = "polygon",
    prec: int = PREC,
) -> RootSet:
    """All roots of ``p``: zero multiplicity plus the nonzero roots with residuals.

    ``converged`` is False if some correction never dropped below
    ``tol * max(1, |root|)`` or a residual exceeds ``residual_bound``; the
    roots found so far are still returned.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("need a nonzero polynomial of degree >= 1")
    gamma = lowest_degree(p)
    q = Polynomial(p.coeffs[gamma:])
    roots: list[complex] = []
    residuals: list[float] = []
    mults: list[int] = []
    converged = True
    iterations = 0
    if start not in ("polygon", "cauchy"):
        raise ValueError(f"unknown start {start!r}")
    with gmpy2.context(gmpy2.get_context(), precision=prec):
        for f, k in squarefree_parts(q):
            zs, ok, it = _solve_squarefree(f, tol, max_iter, start, seed)
            converged &= ok
            iterations += it
            for z in zs:
                res = _residual(list(q.coeffs), z) if k == 1 else _residual(list(f.coeffs), z)
                converged &= res <= residual_bound
                for _ in range(k):
                    roots.append(complex(z))
                    residuals.append(res)
                    mults.append(k)
    order = sorted(range(len(roots)), key=lambda i: (roots[i].real, roots[i].imag))
    return RootSet(
        zero_multiplicity=gamma,
        nonzero_roots=[roots[i] for i in order],
        residuals=[residuals[i] for i in order],
        converged=converged,
        iterations=iterations,
        tol=tol,
        multiplicities=[mults[i] for i in order],
    )


def is_real(z: complex, threshold: float = REAL_THRESHOLD) -> bool:
    return abs(z.imag) < threshold * (1 + abs(z.real))


def real_roots(
    p: Polynomial,
    tol: float = DEFAULT_TOL,
    threshold: float = REAL_THRESHOLD,
    seed: int | None = None,
) -> RealRoots:
    """Nonzero real roots (with multiplicity) under |Im z| < threshold*(1+|Re z|)."""
    rs = find_roots(p, tol, seed=seed)
    reals = sorted(z.real for z in rs.nonzero_roots if is_real(z, threshold))
    return RealRoots(rs.zero_multiplicity, reals, threshold, rs.converged)
