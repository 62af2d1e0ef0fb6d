"""Affine toric varieties presented by strongly convex rational cones.

A cone is stored through its primitive generating rays.  Faces are
enumerated by brute force over ray subsets, each candidate certified by an
exact supporting-functional feasibility check; smoothness of a face is
decided by the Smith normal form of its ray matrix.  The singularity-level
classification then depends only on two combinatorial quantities: whether
the cone is simplicial, and the codimension of the singular locus, which
equals the minimal dimension of a non-smooth face.

Inputs are capped at 16 rays and ambient rank 8; the subset enumeration is
meant for desk-scale cones, not production polyhedral geometry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import inf
from typing import Dict, List, Sequence, Tuple, Union

from .intlinalg import (
    is_smooth_simplicial_cone,
    lattice_rank,
    primitive_vector,
)
from .ratlp import solve_feasibility

MAX_RAYS = 16
MAX_RANK = 8

YES = "yes"
NO = "no"
UNKNOWN = "unknown"

Count = Union[int, float]  # int, or math.inf for "holds for every k"


class NotStronglyConvex(ValueError):
    """The candidate cone contains a line."""


class RedundantRay(ValueError):
    """A ray is a nonnegative combination of the others."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"ray {index} is a nonnegative combination of the other rays")


@dataclass(frozen=True)
class PolyCone:
    """Strongly convex rational polyhedral cone with irredundant primitive rays."""

    ambient_rank: int
    rays: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Face:
    """A face, recorded by the set of cone rays it contains."""

    ray_indices: Tuple[int, ...]
    dimension: int


@dataclass(frozen=True)
class ToricVerdict:
    """Largest certified level per singularity notion (math.inf when smooth)."""

    is_simplicial: bool
    singular_codim: Count
    pre_k_du_bois_max: Count
    k_du_bois_max: Count
    pre_k_rational_max: Count
    k_rational_max: Count


def validate_cone(rays: Sequence[Sequence[int]], ambient_rank: int) -> PolyCone:
    """Primitivise the rays and verify strong convexity and irredundancy.

    Raises NotStronglyConvex when some nonzero v has both v and -v in the
    cone, RedundantRay with the offending input index when a ray already
    lies in the cone of the others, and NonzeroRequired on a zero ray.
    """
    if not 1 <= ambient_rank <= MAX_RANK:
        raise ValueError(f"ambient rank must be between 1 and {MAX_RANK}")
    if len(rays) > MAX_RAYS:
        raise ValueError(f"at most {MAX_RAYS} rays are supported")
    prim: List[Tuple[int, ...]] = []
    for ray in rays:
        vec = tuple(int(x) for x in ray)
        if len(vec) != ambient_rank:
            raise ValueError("ray length does not match the ambient rank")
        prim.append(primitive_vector(vec))

    k = len(prim)
    if k:
        # The cone contains a line iff 0 is a convex combination of rays.
        eqs = [([prim[i][d] for i in range(k)], 0) for d in range(ambient_rank)]
        eqs.append(([1] * k, 1))
        ges = [_unit_row(k, i) for i in range(k)]
        if solve_feasibility(k, eqs, ges) is not None:
            raise NotStronglyConvex("the candidate cone contains a line")
    for idx in range(k):
        others = prim[:idx] + prim[idx + 1:]
        if others and _cone_contains(others, prim[idx], ambient_rank):
            raise RedundantRay(idx)
    return PolyCone(ambient_rank, tuple(prim))


def _unit_row(width: int, position: int) -> Tuple[List[int], int]:
    row = [0] * width
    row[position] = 1
    return row, 0


def _cone_contains(rays: Sequence[Tuple[int, ...]], point: Tuple[int, ...], rank: int) -> bool:
    k = len(rays)
    eqs = [([rays[i][d] for i in range(k)], point[d]) for d in range(rank)]
    ges = [_unit_row(k, i) for i in range(k)]
    return solve_feasibility(k, eqs, ges) is not None


def _is_face(cone: PolyCone, subset: Tuple[int, ...]) -> bool:
    """Exact supporting-functional test: some functional kills exactly `subset`."""
    inside = set(subset)
    eqs = [(list(cone.rays[i]), 0) for i in subset]
    ges = [(list(cone.rays[j]), 1) for j in range(len(cone.rays)) if j not in inside]
    return solve_feasibility(cone.ambient_rank, eqs, ges) is not None


def faces(cone: PolyCone) -> List[Face]:
    """All faces of the cone, from the origin up to the cone itself.

    >>> c = validate_cone([(1, 0), (0, 1)], 2)
    >>> [f.ray_indices for f in faces(c)]
    [(), (0,), (1,), (0, 1)]
    """
    out: List[Face] = []
    indices = range(len(cone.rays))
    for size in range(len(cone.rays) + 1):
        for subset in itertools.combinations(indices, size):
            if _is_face(cone, subset):
                dim = lattice_rank([cone.rays[i] for i in subset], cone.ambient_rank)
                out.append(Face(subset, dim))
    return out


def singular_locus_codim(cone: PolyCone) -> Count:
    """Codimension of the singular locus: the minimal dimension of a
    non-smooth face (non-simplicial faces count as non-smooth), or math.inf
    when every face is smooth."""
    worst: Count = inf
    for face in faces(cone):
        if face.dimension == 0:
            continue
        face_rays = [cone.rays[i] for i in face.ray_indices]
        if len(face_rays) != face.dimension:
            smooth = False
        else:
            smooth = is_smooth_simplicial_cone(face_rays, cone.ambient_rank)
        if not smooth and face.dimension < worst:
            worst = face.dimension
    return worst


def classify_toric(cone: PolyCone) -> ToricVerdict:
    """Maximal certified singularity levels of the affine toric variety.

    An affine toric variety always has all higher Du Bois graded pieces
    concentrated in degree zero, hence the pre-Du-Bois level is unbounded.
    With c the singular-locus codimension, the variety is k-Du Bois for
    2k + 1 <= c.  Simplicial cones are pre-k-rational for every k and
    k-rational for 2k + 1 < c; non-simplicial cones fail pre-1-rationality,
    so both rational levels stop at 0.
    """
    c = singular_locus_codim(cone)
    simplicial = len(cone.rays) == lattice_rank(cone.rays, cone.ambient_rank)
    if c == inf:
        return ToricVerdict(simplicial, inf, inf, inf, inf, inf)
    kdb = (c - 1) // 2
    if simplicial:
        return ToricVerdict(True, c, inf, kdb, inf, (c - 2) // 2)
    return ToricVerdict(False, c, inf, kdb, 0, 0)


def toric_verdict_rows(verdict: ToricVerdict, k_max: int) -> Dict[str, List[dict]]:
    """Per-level yes/no/unknown rows for the four notions, k = 0..k_max.

    The only undecided case is a simplicial cone with odd finite singular
    codimension c at the single level 2k + 1 = c, which sits between the
    certified range and the refuted one.
    """
    c = verdict.singular_codim
    rows: Dict[str, List[dict]] = {
        "pre_k_du_bois": [],
        "k_du_bois": [],
        "pre_k_rational": [],
        "k_rational": [],
    }
    for k in range(k_max + 1):
        rows["pre_k_du_bois"].append(
            {"k": k, "status": YES, "reason": "holds for every affine toric variety"}
        )
        if c == inf or 2 * k + 1 <= c:
            rows["k_du_bois"].append(
                {"k": k, "status": YES, "reason": "singular locus has codimension >= 2k+1"}
            )
        else:
            rows["k_du_bois"].append(
                {
                    "k": k,
                    "status": NO,
                    "reason": f"singular locus has codimension {c} < {2 * k + 1}",
                }
            )
        if verdict.is_simplicial:
            rows["pre_k_rational"].append(
                {"k": k, "status": YES, "reason": "simplicial cone"}
            )
            if c == inf or 2 * k + 1 < c:
                rows["k_rational"].append(
                    {"k": k, "status": YES, "reason": "simplicial and codimension > 2k+1"}
                )
            elif 2 * k + 1 == c:
                rows["k_rational"].append(
                    {
                        "k": k,
                        "status": UNKNOWN,
                        "reason": f"boundary level: singular codimension is exactly {c} = 2k+1",
                    }
                )
            else:
                rows["k_rational"].append(
                    {
                        "k": k,
                        "status": NO,
                        "reason": f"singular locus has codimension {c} <= 2k+1",
                    }
                )
        else:
            if k == 0:
                rows["pre_k_rational"].append(
                    {"k": k, "status": YES, "reason": "normal toric varieties have rational singularities"}
                )
                rows["k_rational"].append(
                    {"k": k, "status": YES, "reason": "normal toric varieties have rational singularities"}
                )
            else:
                reason = "non-simplicial cone: the level-1 rational condition already fails"
                rows["pre_k_rational"].append({"k": k, "status": NO, "reason": reason})
                rows["k_rational"].append({"k": k, "status": NO, "reason": reason})
    return rows
