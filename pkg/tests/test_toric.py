"""Tests for cone validation, face enumeration and the toric classifier.

The independent face oracle is a Fourier-Motzkin feasibility check, a
different algorithm family from the simplex used by the library.
"""

import itertools
import random
from fractions import Fraction
from math import inf

import pytest

from dubois.intlinalg import NonzeroRequired
from dubois.toric import (
    NO,
    UNKNOWN,
    YES,
    NotStronglyConvex,
    PolyCone,
    RedundantRay,
    classify_toric,
    faces,
    singular_locus_codim,
    toric_verdict_rows,
    validate_cone,
)

QUADRIC_RAYS = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]


# --- Fourier-Motzkin oracle -------------------------------------------------

def fm_feasible(inequalities, num_vars):
    """Feasibility of {a . x >= b} by Fourier-Motzkin elimination."""
    system = [([Fraction(c) for c in a], Fraction(b)) for a, b in inequalities]
    for var in range(num_vars):
        pos, neg, rest = [], [], []
        for coeffs, rhs in system:
            if coeffs[var] > 0:
                pos.append((coeffs, rhs))
            elif coeffs[var] < 0:
                neg.append((coeffs, rhs))
            else:
                rest.append((coeffs, rhs))
        new = rest
        for pc, pb in pos:
            for nc, nb in neg:
                scale_p = 1 / pc[var]
                scale_n = -1 / nc[var]
                coeffs = [
                    scale_p * pv + scale_n * nv for pv, nv in zip(pc, nc)
                ]
                new.append((coeffs, scale_p * pb + scale_n * nb))
        system = new
    return all(rhs <= 0 for _, rhs in system)


def fm_is_face(cone, subset):
    """Supporting-functional test via FM: equalities expanded to two
    inequalities each."""
    rows = []
    inside = set(subset)
    for i in subset:
        rows.append((list(cone.rays[i]), 0))
        rows.append(([-c for c in cone.rays[i]], 0))
    for j in range(len(cone.rays)):
        if j not in inside:
            rows.append((list(cone.rays[j]), 1))
    return fm_feasible(rows, cone.ambient_rank)


# --- validation -------------------------------------------------------------

def test_validate_primitivises():
    cone = validate_cone([(2, 0), (0, 3)], 2)
    assert cone.rays == ((1, 0), (0, 1))


def test_validate_rejects_line():
    with pytest.raises(NotStronglyConvex):
        validate_cone([(1, 0), (-1, 0)], 2)
    with pytest.raises(NotStronglyConvex):
        validate_cone([(1, 0), (0, 1), (-1, -1)], 2)


def test_validate_rejects_redundant_ray():
    with pytest.raises(RedundantRay) as err:
        validate_cone([(1, 0), (0, 1), (1, 1)], 2)
    assert err.value.index == 2


def test_validate_rejects_zero_ray():
    with pytest.raises(NonzeroRequired):
        validate_cone([(1, 0), (0, 0)], 2)


def test_validate_rejects_bad_sizes():
    with pytest.raises(ValueError):
        validate_cone([(1, 0)], 9)
    with pytest.raises(ValueError):
        validate_cone([(1, 0, 0)], 2)


# --- faces ------------------------------------------------------------------

def test_faces_smooth_2d():
    cone = validate_cone([(1, 0), (0, 1)], 2)
    got = [(f.ray_indices, f.dimension) for f in faces(cone)]
    assert got == [((), 0), ((0,), 1), ((1,), 1), ((0, 1), 2)]


def test_faces_single_ray():
    cone = validate_cone([(1, 2)], 2)
    assert [(f.ray_indices, f.dimension) for f in faces(cone)] == [((), 0), ((0,), 1)]


def test_faces_quadric_count_and_oracle():
    cone = validate_cone(QUADRIC_RAYS, 3)
    found = faces(cone)
    assert len(found) == 10
    face_sets = {f.ray_indices for f in found}
    # brute force the full subset lattice against the FM oracle
    for size in range(len(cone.rays) + 1):
        for subset in itertools.combinations(range(len(cone.rays)), size):
            assert (subset in face_sets) == fm_is_face(cone, subset), subset
    # the two diagonals are not faces
    assert (0, 3) not in face_sets
    assert (1, 2) not in face_sets


def test_faces_closed_under_intersection():
    rng = random.Random(42)
    cones = [validate_cone(QUADRIC_RAYS, 3)]
    while len(cones) < 6:
        rays = [
            tuple(rng.randint(-3, 3) for _ in range(3))
            for _ in range(rng.randint(1, 4))
        ]
        try:
            cones.append(validate_cone(rays, 3))
        except (ValueError, NotStronglyConvex, RedundantRay, NonzeroRequired):
            continue
    for cone in cones:
        face_sets = {f.ray_indices for f in faces(cone)}
        for a in face_sets:
            for b in face_sets:
                meet = tuple(sorted(set(a) & set(b)))
                assert meet in face_sets, (cone.rays, a, b)


def test_simplicial_cone_has_boolean_face_lattice():
    rng = random.Random(7)
    produced = 0
    while produced < 10:
        rank = rng.randint(1, 4)
        k = rng.randint(1, rank)
        rays = [tuple(rng.randint(-4, 4) for _ in range(rank)) for _ in range(k)]
        try:
            cone = validate_cone(rays, rank)
        except (ValueError, NotStronglyConvex, RedundantRay, NonzeroRequired):
            continue
        if len(cone.rays) != classify_rank(cone):
            continue
        assert len(faces(cone)) == 2 ** len(cone.rays)
        produced += 1


def classify_rank(cone):
    from dubois.intlinalg import lattice_rank

    return lattice_rank(cone.rays, cone.ambient_rank)


# --- singular locus and classification --------------------------------------

def test_singular_codim_examples():
    assert singular_locus_codim(validate_cone([(1, 0), (0, 1)], 2)) == inf
    assert singular_locus_codim(validate_cone([(1, 0), (1, 2)], 2)) == 2
    assert singular_locus_codim(validate_cone(QUADRIC_RAYS, 3)) == 3


def test_classify_quadric():
    verdict = classify_toric(validate_cone(QUADRIC_RAYS, 3))
    assert verdict.is_simplicial is False
    assert verdict.singular_codim == 3
    assert verdict.pre_k_du_bois_max == inf
    assert verdict.k_du_bois_max == 1
    assert verdict.pre_k_rational_max == 0
    assert verdict.k_rational_max == 0


def test_classify_a1():
    verdict = classify_toric(validate_cone([(1, 0), (1, 2)], 2))
    assert verdict.is_simplicial is True
    assert verdict.singular_codim == 2
    assert verdict.k_du_bois_max == 0
    assert verdict.pre_k_rational_max == inf
    assert verdict.k_rational_max == 0


def test_classify_smooth():
    verdict = classify_toric(validate_cone([(1, 0), (0, 1)], 2))
    assert verdict == classify_toric(validate_cone([(2, 0), (0, 5)], 2))
    assert verdict.singular_codim == inf
    assert verdict.k_du_bois_max == inf
    assert verdict.k_rational_max == inf


def random_polygon_cone(rng):
    """Cone over a lattice polygon with >= 4 vertices placed at height 1:
    a strongly convex non-simplicial 3d cone."""
    while True:
        pts = sorted(
            {(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(8)}
        )
        hull = convex_hull(pts)
        if len(hull) >= 4:
            rays = [(x, y, 1) for x, y in hull]
            return validate_cone(rays, 3)


def convex_hull(points):
    points = sorted(set(points))
    if len(points) <= 2:
        return points

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in points:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(points):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def test_simplicial_vs_nonsimplicial_rational_property():
    rng = random.Random(2024)
    simplicial_seen = 0
    while simplicial_seen < 8:
        rank = rng.randint(2, 4)
        k = rng.randint(1, rank)
        rays = [tuple(rng.randint(-4, 4) for _ in range(rank)) for _ in range(k)]
        try:
            cone = validate_cone(rays, rank)
        except (ValueError, NotStronglyConvex, RedundantRay, NonzeroRequired):
            continue
        if len(cone.rays) != classify_rank(cone):
            continue
        verdict = classify_toric(cone)
        assert verdict.pre_k_rational_max == inf
        simplicial_seen += 1
    for _ in range(5):
        cone = random_polygon_cone(rng)
        verdict = classify_toric(cone)
        assert verdict.is_simplicial is False
        assert verdict.pre_k_rational_max == 0
        assert verdict.k_rational_max == 0


def test_k_du_bois_max_dominates_k_rational_max():
    fixtures = [
        validate_cone(QUADRIC_RAYS, 3),
        validate_cone([(1, 0), (1, 2)], 2),
        validate_cone([(1, 0), (0, 1)], 2),
        validate_cone([(1, 0, 0), (0, 1, 0), (1, 1, 2)], 3),
        validate_cone([(1, 2)], 2),
    ]
    for cone in fixtures:
        verdict = classify_toric(cone)
        assert verdict.k_du_bois_max >= verdict.k_rational_max


def test_boundary_level_reported_unknown():
    # simplicial with singular codimension 3: level 1 sits on 2k+1 = c
    cone = validate_cone([(1, 0, 0), (0, 1, 0), (1, 1, 2)], 3)
    verdict = classify_toric(cone)
    assert verdict.singular_codim == 3 and verdict.is_simplicial
    rows = toric_verdict_rows(verdict, 3)
    ratl = [row["status"] for row in rows["k_rational"]]
    assert ratl == [YES, UNKNOWN, NO, NO]
    assert all(row["status"] == YES for row in rows["pre_k_du_bois"])
    assert [row["status"] for row in rows["k_du_bois"]] == [YES, YES, NO, NO]


def test_no_silent_lattice_changes():
    # the same rays in a different ambient rank require re-validation
    cone2 = validate_cone([(2, 0), (0, 2)], 2)
    assert cone2.rays == ((1, 0), (0, 1))
    with pytest.raises(ValueError):
        validate_cone([(2, 0), (0, 2)], 3)
    assert isinstance(cone2, PolyCone)


def test_zero_ray_cone_is_the_torus():
    cone = validate_cone([], 2)
    assert cone.rays == ()
    assert [f.ray_indices for f in faces(cone)] == [()]
    verdict = classify_toric(cone)
    assert verdict.singular_codim == inf and verdict.k_rational_max == inf
