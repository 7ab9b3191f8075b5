from __future__ import annotations

import math

import numpy as np
import pytest

from dompoly import bkw, expsum
from dompoly import families as fam
from dompoly.bkw import Verdict
from dompoly.poly import ONE, X
from dompoly.roots import find_roots

BOOK = expsum.family_book()
GBOOK5 = expsum.family_gbook5()
TRIPLE = complex((-3 - math.sqrt(2)) / 2, math.sqrt(1 + 2 * math.sqrt(2)) / 2)


def idx(f, lam):
    return f.index_of(lam)


def test_book_origin_is_alpha_zero():
    c = bkw.classify_point(BOOK, 0)
    assert c.verdict is Verdict.ALPHA_ZERO and c.exact_alpha_zero
    assert c.dominant_indices == [idx(BOOK, (ONE + X) ** 2)]


def test_book_minus_half_is_alpha_zero():
    c = bkw.classify_point(BOOK, -0.5)
    assert c.verdict is Verdict.ALPHA_ZERO and c.exact_alpha_zero
    assert c.dominant_indices == [idx(BOOK, X ** 2 + 2 * X)]
    assert c.moduli[idx(BOOK, X ** 2 + 2 * X)] == 0.75


def test_book_modulus_tie():
    c = bkw.classify_point(BOOK, complex(-2, 1))
    assert c.verdict is Verdict.MODULUS_TIE
    assert sorted(c.dominant_indices) == sorted([idx(BOOK, X), idx(BOOK, X ** 2 + 2 * X)])
    assert math.isclose(c.moduli[idx(BOOK, (ONE + X) ** 2)], 2.0)


def test_book_not_limit():
    c = bkw.classify_point(BOOK, -3)
    assert c.verdict is Verdict.NOT_LIMIT
    assert c.dominant_indices == [idx(BOOK, (ONE + X) ** 2)]
    assert c.margin == pytest.approx(4 - 3)


def test_verdict_invariants_on_random_points():
    rng = np.random.default_rng(5)
    for z in rng.uniform(-4, 2, 300) + 1j * rng.uniform(-3, 3, 300):
        c = bkw.classify_point(BOOK, z, tie_tol=1e-2)
        if c.verdict is Verdict.MODULUS_TIE:
            assert len(c.dominant_indices) >= 2
        else:
            assert len(c.dominant_indices) == 1


def test_pole_rejected():
    f = expsum.ExpSumFamily(((expsum.RationalFunction(ONE, X - 1), X), (ONE, X + 3)))
    with pytest.raises(expsum.PoleError):
        bkw.classify_point(f, 1.0)
    grid = bkw.classify_grid(f, (0, 2, -1, 1), (3, 3))
    assert grid.poles == [1 + 0j]
    assert len(grid.points) == 8


def test_triple_point_on_all_curves():
    assert abs(TRIPLE - bkw.TRIPLE_POINTS[0]) < 1e-15
    for r in bkw.curve_residuals(TRIPLE):
        assert abs(r) <= 1e-12


def test_membership_examples():
    assert bkw.book_limit_membership(complex(-2.5, math.sqrt(1.75)), 1e-9)
    assert bkw.book_limit_membership(TRIPLE, 1e-12)
    assert bkw.book_limit_membership(-0.5, 1e-12)
    # i/sqrt(2) is on the right hyperbola branch, whose window admits Re = 0
    assert bkw.book_limit_membership(complex(0, 1 / math.sqrt(2)), 1e-12)
    # the left branch between its vertex and the triple points is excluded
    assert not bkw.book_limit_membership(complex(-1 - math.sqrt(0.5 + 0.1 ** 2), 0.1), 1e-3)
    assert not bkw.book_limit_membership(complex(-2.0, 0.0), 0.5)


def test_distance_examples():
    assert bkw.distance_to_book_limit(0) == 0
    assert bkw.distance_to_book_limit(TRIPLE) < 1e-12
    # the circle arc stops at Re = (-3 - sqrt 2)/2 and is 1 away from -2, but
    # the |x+1|^2 = |x| curve passes through -(3 + sqrt 5)/2
    assert bkw.distance_to_book_limit(-2) == pytest.approx((math.sqrt(5) - 1) / 2, abs=1e-12)


def test_distance_on_each_curve():
    for name, z in bkw.sample_book_curves(60, 5.0):
        assert bkw.distance_to_book_limit(z) < 1e-9, name


def test_point_and_grid_distances_agree():
    rng = np.random.default_rng(11)
    zs = rng.uniform(-4, 1, 200) + 1j * rng.uniform(-2.5, 2.5, 200)
    fast = bkw.distances_to_book_limit(zs, spacing=1e-4)
    slow = np.array([bkw.distance_to_book_limit(z) for z in zs])
    assert np.all(fast >= slow - 1e-12)
    assert np.all(fast - slow <= 1e-4)


def test_curve_pieces_meet_at_triple_points():
    for piece in bkw.book_curve_pieces(6.0):
        ends = [complex(piece.point(piece.lo)), complex(piece.point(piece.hi))]
        if piece.name in ("circle", "cardioid"):
            assert min(abs(e - TRIPLE) for e in ends) < 1e-12
            assert min(abs(e - TRIPLE.conjugate()) for e in ends) < 1e-12


def _grid_consistency(f, band):
    nodes = np.array(list(bkw.grid_nodes((-4, 1, -2.5, 2.5), (400, 400))))
    dist = bkw.distances_to_book_limit(nodes, include_points=False)
    near_iso = np.min(np.abs(nodes[:, None] - np.array(bkw.ISOLATED_POINTS)[None, :]), axis=1)
    bad_near, bad_far = [], []
    for z, d, di in zip(nodes, dist, near_iso):
        if d <= 1e-3 and di > 1e-2:
            if bkw.classify_point(f, z, band=band).verdict is not Verdict.MODULUS_TIE:
                bad_near.append(z)
        elif d > 1e-2 and di > 1e-2:
            if bkw.classify_point(f, z, band=band).verdict is not Verdict.NOT_LIMIT:
                bad_far.append(z)
    return bad_near, bad_far


@pytest.mark.parametrize("family", [BOOK, GBOOK5], ids=["book", "gbook5"])
def test_geometry_matches_classification(family):
    # geometric tie band 2e-3: every node within 1e-3 of the curves ties,
    # every node farther than 1e-2 is not a limit point
    bad_near, bad_far = _grid_consistency(family, 2e-3)
    assert bad_near == [] and bad_far == []


def test_relative_tie_band_cannot_satisfy_both_sides():
    """Why the grid check uses the geometric band.

    The relative modulus gap of a point within 1e-3 of the curves can exceed
    the gap of a point more than 1e-2 away, so no single relative tie_tol
    separates them.
    """
    z_near = complex(-0.2907268170426067, 0.04385964912280693)
    z_far = complex(-3.5238095238095237, -2.43734335839599)
    assert bkw.distance_to_book_limit(z_near) <= 1e-3
    assert bkw.distance_to_book_limit(z_far) > 1e-2

    def rel_gap(z):
        m = sorted((abs(lam(z)) for lam in BOOK.lambdas), reverse=True)
        return (m[0] - m[1]) / m[0]

    assert rel_gap(z_near) > rel_gap(z_far)


def test_gbook5_shares_book_curves():
    region, res = (-4, 1, -2.5, 2.5), (81, 81)
    a = bkw.classify_grid(BOOK, region, res)
    b = bkw.classify_grid(GBOOK5, region, res)
    ties_a = [z for z, c in a.points if c.verdict is Verdict.MODULUS_TIE]
    ties_b = [z for z, c in b.points if c.verdict is Verdict.MODULUS_TIE]
    assert ties_a == ties_b and ties_a


def test_gbook5_isolated_points():
    """Condition (ii) with the gbook5 alphas, checked exactly.

    At 0 the dominant term is (x+1)^2 with alpha x^2(x+1), which vanishes, so
    0 is a limit point (it is also a root of every member). At -1/2 the
    dominant term is x^2+2x with alpha 2x^2+3x = -1 there, so -1/2 is not.
    """
    c0 = bkw.classify_point(GBOOK5, 0)
    assert c0.verdict is Verdict.ALPHA_ZERO and c0.exact_alpha_zero
    assert c0.dominant_indices == [idx(GBOOK5, (ONE + X) ** 2)]
    ch = bkw.classify_point(GBOOK5, -0.5)
    assert ch.verdict is Verdict.NOT_LIMIT
    assert ch.dominant_indices == [idx(GBOOK5, X ** 2 + 2 * X)]
    assert GBOOK5.alphas[ch.dominant_indices[0]](-0.5) == -1


@pytest.mark.parametrize("poly", [fam.dompoly_book, fam.dompoly_gbook5], ids=["book", "gbook5"])
def test_root_cloud_without_escaping_pair(poly):
    """Diagnostic beside the root-cloud acceptance criteria.

    Exactly one conjugate pair per n lies far from the limit set and its
    modulus grows with n; the remaining roots approach the set.
    """
    far_moduli, rest_max = [], []
    for n in (10, 20, 30):
        rs = find_roots(poly(n))
        d = [bkw.distance_to_book_limit(z) for z in rs.nonzero_roots]
        far = [z for z, di in zip(rs.nonzero_roots, d) if di > 0.25]
        assert len(far) == 2 and abs(far[0] - far[1].conjugate()) < 1e-9
        far_moduli.append(abs(far[0]))
        rest_max.append(max(di for di in d if di <= 0.25))
    assert far_moduli[0] < far_moduli[1] < far_moduli[2]
    assert rest_max[0] <= 0.25 and rest_max[2] <= 0.12
    assert rest_max[0] > rest_max[1] > rest_max[2]
