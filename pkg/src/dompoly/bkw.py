"""Limits of roots for exponential-sum families.

A point z is a limit of roots of f_n = sum alpha_i lambda_i**n when either
two or more |lambda_i(z)| tie for the maximum, or a single maximal term has
alpha(z) = 0. ``classify_point`` applies that test numerically with an
explicit relative tie band. The rest of the module describes the limit set
of the book family: a circle arc, two hyperbola pieces, an arc of
|x+1|^2 = |x|, and the points 0 and -1/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

import numpy as np
from scipy.optimize import minimize_scalar

from .expsum import ExpSumFamily, PoleError, alpha_exact_value

DEFAULT_TIE_TOL = 1e-6
ALPHA_ZERO_TOL = 1e-9

# Real part where the three curves meet, and the matching imaginary part.
CUT_RE = (-3 - math.sqrt(2)) / 2
CUT_IM = math.sqrt(1 + 2 * math.sqrt(2)) / 2
HYPERBOLA_VERTEX_RE = (-2 - math.sqrt(2)) / 2
TRIPLE_POINTS = (complex(CUT_RE, CUT_IM), complex(CUT_RE, -CUT_IM))
ISOLATED_POINTS = (0j, -0.5 + 0j)


class Verdict(str, Enum):
    NOT_LIMIT = "NotLimit"
    MODULUS_TIE = "LimitByModulusTie"
    ALPHA_ZERO = "LimitByAlphaZero"


@dataclass
class LimitClassification:
    verdict: Verdict
    dominant_indices: list[int]
    margin: float
    moduli: list[float] = field(default_factory=list)
    exact_alpha_zero: bool = False

    @property
    def is_limit(self) -> bool:
        return self.verdict is not Verdict.NOT_LIMIT


def _alpha_zero(alpha, z: complex) -> tuple[bool, bool]:
    """(numerically zero, exactly zero) for alpha at z."""
    exact = alpha_exact_value(alpha, z)
    if exact is not None and exact == (0, 0):
        return True, True
    scale = 1.0 + max(abs(c) for c in alpha.num.coeffs)
    den = alpha.den(z)
    value = abs(alpha.num(z) / den)
    return value <= ALPHA_ZERO_TOL * scale, False


def _tie_distance(li, lj, z: complex) -> float:
    """First-order distance from z to the curve |lambda_i| = |lambda_j|.

    log|lambda_i / lambda_j| is harmonic with gradient modulus
    |lambda_i'/lambda_i - lambda_j'/lambda_j|.
    """
    vi, vj = li(z), lj(z)
    if vi == 0 or vj == 0:
        return 0.0 if vi == vj else math.inf
    grad = abs(li.derivative()(z) / vi - lj.derivative()(z) / vj)
    gap = abs(math.log(abs(vi) / abs(vj)))
    if grad == 0:
        return 0.0 if gap == 0 else math.inf
    return gap / grad


def classify_point(
    fam: ExpSumFamily,
    z: complex,
    tie_tol: float = DEFAULT_TIE_TOL,
    band: float | None = None,
) -> LimitClassification:
    """Limit-of-roots verdict at z.

    Moduli m_i = |lambda_i(z)|. By default index i is dominant when
    ``m_max - m_i <= tie_tol * m_max``. With ``band`` set, index i is
    dominant when the estimated distance from z to the curve
    |lambda_i| = |lambda_max| is at most ``band``, which makes the tie test
    uniform in the plane. ``margin`` is the gap between the smallest dominant
    modulus and the largest non-dominant one (the largest modulus itself
    when everything ties).
    """
    z = complex(z)
    for a, _ in fam.terms:
        if a.den.degree > 0 and abs(a.den(z)) == 0:
            raise PoleError(f"alpha denominator {a.den} vanishes at {z}")
    lambdas = fam.lambdas
    moduli = [abs(lam(z)) for lam in lambdas]
    top = max(moduli)
    if band is None:
        dominant = [i for i, m in enumerate(moduli) if top - m <= tie_tol * top]
    else:
        i0 = moduli.index(top)
        dominant = [
            i for i in range(len(moduli))
            if i == i0 or _tie_distance(lambdas[i0], lambdas[i], z) <= band
        ]
    rest = [m for i, m in enumerate(moduli) if i not in dominant]
    margin = min(moduli[i] for i in dominant) - max(rest) if rest else top
    if len(dominant) >= 2:
        return LimitClassification(Verdict.MODULUS_TIE, dominant, margin, moduli)
    j = dominant[0]
    zero, exact = _alpha_zero(fam.alphas[j], z)
    if zero:
        return LimitClassification(Verdict.ALPHA_ZERO, dominant, margin, moduli, exact)
    return LimitClassification(Verdict.NOT_LIMIT, dominant, margin, moduli)


@dataclass
class GridResult:
    points: list[tuple[complex, LimitClassification]]
    poles: list[complex]
    tie_tol: float
    band: float | None = None


def grid_nodes(region: tuple[float, float, float, float], resolution: tuple[int, int]) -> Iterator[complex]:
    """Row-major nodes of a ``rows x cols`` grid over [x0, x1] x [y0, y1]."""
    x0, x1, y0, y1 = region
    rows, cols = resolution
    if rows < 2 or cols < 2:
        raise ValueError("resolution must be at least 2 per axis")
    for y in np.linspace(y0, y1, rows):
        for x in np.linspace(x0, x1, cols):
            yield complex(x, y)


def grid_pitch(region: tuple[float, float, float, float], resolution: tuple[int, int]) -> float:
    x0, x1, y0, y1 = region
    rows, cols = resolution
    return max((x1 - x0) / (cols - 1), (y1 - y0) / (rows - 1))


def classify_grid(
    fam: ExpSumFamily,
    region: tuple[float, float, float, float],
    resolution: tuple[int, int],
    tie_tol: float | None = None,
    band: float | None = None,
) -> GridResult:
    """Classify every grid node; nodes at alpha poles are skipped and reported.

    With neither ``tie_tol`` nor ``band`` given, the geometric tie test of
    ``classify_point`` is used with a band of half the grid pitch, so each
    curve shows up about one node wide. A relative ``tie_tol`` alone gives
    bands whose width varies across the plane.
    """
    if tie_tol is None and band is None:
        band = 0.5 * grid_pitch(region, resolution)
    if tie_tol is None:
        tie_tol = DEFAULT_TIE_TOL
    points, poles = [], []
    for z in grid_nodes(region, resolution):
        try:
            points.append((z, classify_point(fam, z, tie_tol, band)))
        except PoleError:
            poles.append(z)
    return GridResult(points, poles, tie_tol, band)


# ---------------------------------------------------------------------------
# Book limit set geometry
# ---------------------------------------------------------------------------

def curve_residuals(z: complex) -> tuple[float, float, float]:
    """Residuals of the circle, hyperbola and |x+1|^2 = |x| equations at z."""
    circle = abs(z + 2) - 1
    hyper = (z.real + 1) ** 2 - z.imag ** 2 - 0.5
    cardioid = abs(z + 1) ** 2 - abs(z)
    return circle, hyper, cardioid


# Parametrisations accept floats or numpy arrays.

def _circle_point(phi):
    return -2 + np.exp(1j * phi)


def _hyperbola_left(t):
    s = 1 / math.sqrt(2)
    return -1 - s * np.cosh(t) + 1j * s * np.sinh(t)


def _hyperbola_right(t):
    s = 1 / math.sqrt(2)
    return -1 + s * np.cosh(t) + 1j * s * np.sinh(t)


def _cardioid_outer(theta):
    # r^2 + (2 cos(theta) - 1) r + 1 = 0, larger root
    b = 2 * np.cos(theta) - 1
    disc = np.maximum(b * b - 4, 0.0)
    r = (-b + np.sqrt(disc)) / 2
    return r * np.exp(1j * theta)


_PHI_CUT = math.atan2(CUT_IM, CUT_RE + 2)
_T_CUT = math.asinh(math.sqrt(2) * CUT_IM)
_THETA_CUT = math.atan2(CUT_IM, CUT_RE)


@dataclass(frozen=True)
class CurvePiece:
    name: str
    point: object
    lo: float
    hi: float


def book_curve_pieces(reach: float = 10.0) -> list[CurvePiece]:
    """Parametrised pieces of the book limit set.

    Hyperbola pieces are unbounded; ``reach`` caps them at parameter values
    whose points lie farther than about ``reach`` from the origin.
    """
    t_max = math.acosh(max(math.sqrt(2) * (reach + 2), 1.0)) + 1.0
    return [
        CurvePiece("circle", _circle_point, -_PHI_CUT, _PHI_CUT),
        CurvePiece("hyperbola", _hyperbola_right, -t_max, t_max),
        CurvePiece("hyperbola", _hyperbola_left, _T_CUT, t_max),
        CurvePiece("hyperbola", _hyperbola_left, -t_max, -_T_CUT),
        CurvePiece("cardioid", _cardioid_outer, _THETA_CUT, 2 * math.pi - _THETA_CUT),
    ]


def _distance_to_piece(z: complex, piece: CurvePiece, samples: int = 2048) -> float:
    """Sample, refine with bounded Brent, then measure across the local tangent.

    Brent only pins the parameter to about sqrt(eps); the perpendicular
    distance to the tangent line at that foot point is accurate to O(dt**2).
    """
    ts = np.linspace(piece.lo, piece.hi, samples)
    pts = piece.point(ts)
    d = np.abs(pts - z)
    k = int(np.argmin(d))
    lo = ts[max(k - 1, 0)]
    hi = ts[min(k + 1, samples - 1)]
    res = minimize_scalar(
        lambda t: abs(complex(piece.point(t)) - z), bounds=(lo, hi), method="bounded",
        options={"xatol": 1e-14},
    )
    t = float(res.x)
    best = min(float(d[k]), float(res.fun))
    span = piece.hi - piece.lo
    if piece.lo + 1e-9 * span < t < piece.hi - 1e-9 * span:
        h = 1e-6 * max(1.0, abs(t))
        tangent = complex(piece.point(t + h) - piece.point(t - h))
        if tangent != 0:
            u = tangent / abs(tangent)
            off = z - complex(piece.point(t))
            along = (off * u.conjugate()).real
            # the perpendicular foot must stay within the refinement bracket
            if abs(along) <= abs(complex(piece.point(hi) - piece.point(lo))):
                best = min(best, abs((off * u.conjugate()).imag))
    return best


def distance_to_book_limit(z: complex, include_points: bool = True) -> float:
    """Euclidean distance from z to the book limit set.

    The windows on each curve all end at the two triple points, so clamping a
    projection to its window is the same as including those points.
    """
    z = complex(z)
    reach = abs(z) + 4.0
    candidates = [abs(z - p) for p in TRIPLE_POINTS]
    if include_points:
        candidates += [abs(z - p) for p in ISOLATED_POINTS]
    # circle: exact projection when it lands inside the arc
    w = z + 2
    if abs(w) == 0:
        candidates.append(1.0)
    else:
        phi = math.atan2(w.imag, w.real)
        if abs(phi) <= _PHI_CUT:
            candidates.append(abs(abs(w) - 1))
    for piece in book_curve_pieces(reach)[1:]:
        candidates.append(_distance_to_piece(z, piece))
    return min(candidates)


def book_limit_membership(z: complex, band: float) -> bool:
    return distance_to_book_limit(z) <= band


def sample_book_curves(per_curve: int = 400, reach: float = 4.0) -> list[tuple[str, complex]]:
    """Points along each curve piece plus the isolated points, for plotting."""
    out: list[tuple[str, complex]] = []
    for piece in book_curve_pieces(reach):
        for w in piece.point(np.linspace(piece.lo, piece.hi, per_curve)):
            out.append((piece.name, complex(w)))
    for p in ISOLATED_POINTS:
        out.append(("point", p))
    return out


def _dense_book_samples(spacing: float, reach: float) -> np.ndarray:
    """Points along every piece, resampled to roughly uniform arc length."""
    chunks = []
    for piece in book_curve_pieces(reach):
        ts = np.linspace(piece.lo, piece.hi, 4001)
        arc = np.concatenate([[0.0], np.cumsum(np.abs(np.diff(piece.point(ts))))])
        count = int(math.ceil(arc[-1] / spacing)) + 2
        chunks.append(piece.point(np.interp(np.linspace(0, arc[-1], count), arc, ts)))
    return np.concatenate(chunks)


def distances_to_book_limit(zs, spacing: float = 1e-4, include_points: bool = True) -> np.ndarray:
    """Vectorised distance for many points, accurate to about ``spacing``.

    Nearest neighbour against a dense sampling of the curves; intended for
    grids, where per-point refinement would be too slow.
    """
    from scipy.spatial import cKDTree

    zs = np.asarray(zs, dtype=complex)
    reach = float(np.max(np.abs(zs))) + 4.0 if zs.size else 4.0
    curve = _dense_book_samples(spacing, reach)
    extra = list(TRIPLE_POINTS) + (list(ISOLATED_POINTS) if include_points else [])
    curve = np.concatenate([curve, np.array(extra)])
    # compacted nodes make queries ~8x slower on points lying along curves
    tree = cKDTree(np.column_stack([curve.real, curve.imag]), compact_nodes=False)
    d, _ = tree.query(np.column_stack([zs.real, zs.imag]))
    return d
