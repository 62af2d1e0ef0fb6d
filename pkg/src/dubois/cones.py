"""Singularity-level criteria for affine cones over catalogued bases.

The cone over (X, L) is Spec of the section ring of L.  Apart from the
affine-space case (P^r, O(1)), its unique singular point is the vertex, so
the singular locus has codimension dim X + 1.  Each criterion below reduces
a singularity notion to finitely many vanishing statements about
h^q(X, Omega^p otimes L^m); infinite twist ranges are cut down by the
model's vanishing-tail certificates, never by a numeric cutoff.

Three-valued logic is used throughout: an interval dimension with lower
bound zero makes a verdict "unknown", never a guess.  A "no" always carries
a witness, and the witnessed grid point is the lexicographically least
failing (p, i, m) triple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import inf
from typing import Optional, Tuple, Union

from .cohomology import CohomologyModel, DimValue, hilbert_function

YES = "yes"
NO = "no"
UNKNOWN = "unknown"

Count = Union[int, float, None]  # verdict maximum: int, math.inf, or None ("never")


class OutOfRange(ValueError):
    """Requested level k exceeds the range covered by the cone criteria."""


class CriterionRangeExceeded(ValueError):
    """Requested p lies outside the validity range of the reflexivity test."""


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str = ""
    witness: Optional[Tuple[int, int, int]] = None  # (p, i, m) grid point
    witness_dim: Optional[DimValue] = None


@dataclass(frozen=True)
class ConeSpec:
    """The cone over model's base, polarised by the model's bundle."""

    model: CohomologyModel
    smooth_total_space: bool

    @classmethod
    def for_model(cls, model: CohomologyModel) -> "ConeSpec":
        # Detection is by catalog identity, not by a general smoothness test.
        return cls(model, model.is_affine_space_cone)

    @property
    def n(self) -> int:
        return self.model.base_dim

    @property
    def total_dim(self) -> int:
        return self.n + 1


def _vanishing_scan(spec: ConeSpec, k: int, m_start: int, skip_diagonal: bool) -> Verdict:
    """Check hdim(p, i, m) = 0 for p <= k, i >= 1 and m >= m_start.

    With skip_diagonal, the grid point (m, i) = (0, p) is exempt for each p
    (the diagonal entries are handled by the cup-product chain instead).
    The scan is in lexicographic (p, i, m) order, so the reported witness
    is the least failing triple; a definite nonzero beats any earlier
    undetermined entry.
    """
    model = spec.model
    n = spec.n
    first_open: Optional[Tuple[int, int, int, DimValue]] = None
    for p in range(0, min(k, n) + 1):
        for i in range(1, n + 1):
            bound = model.vanishing_bound(p, i)
            if bound is None:
                return Verdict(
                    UNKNOWN,
                    reason=f"no vanishing-tail certificate for h^{i}(Omega^{p} x L^m)",
                )
            for m in range(m_start, bound):
                if skip_diagonal and m == 0 and i == p:
                    continue
                v = model.hdim(p, i, m)
                if v.is_nonzero:
                    return Verdict(
                        NO,
                        reason=f"h^{i}(Omega^{p} x L^{m}) = {v} is nonzero",
                        witness=(p, i, m),
                        witness_dim=v,
                    )
                if v.is_undetermined and first_open is None:
                    first_open = (p, i, m, v)
    if first_open is not None:
        p, i, m, v = first_open
        return Verdict(
            UNKNOWN,
            reason=f"h^{i}(Omega^{p} x L^{m}) is only bounded: {v}",
            witness=(p, i, m),
            witness_dim=v,
        )
    return Verdict(YES, reason="all required cohomology groups vanish")


def pre_k_du_bois(spec: ConeSpec, k: int) -> Verdict:
    """Vanishing of all positive-degree cohomology of the Du Bois graded
    pieces up to level k: h^i(Omega^p x L^m) = 0 for i >= 1, m >= 1, p <= k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if spec.smooth_total_space:
        return Verdict(YES, reason="total space is smooth")
    return _vanishing_scan(spec, k, m_start=1, skip_diagonal=False)


def k_du_bois(spec: ConeSpec, k: int) -> Verdict:
    """Level-k Du Bois: the pre-level vanishing, plus 2k <= dim X, plus
    h^p(O_X) = 0 for 1 <= p <= k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if spec.smooth_total_space:
        return Verdict(YES, reason="total space is smooth")
    n = spec.n
    if 2 * k > n:
        return Verdict(
            NO,
            reason=f"codimension bound fails: singular locus has codimension {n + 1} < {2 * k + 1}",
        )
    open_structure: Optional[Verdict] = None
    for p in range(1, k + 1):
        v = spec.model.hdim(0, p, 0)
        if v.is_nonzero:
            return Verdict(
                NO,
                reason=f"h^{p}(O_X) = {v} is nonzero",
                witness=(0, p, 0),
                witness_dim=v,
            )
        if v.is_undetermined and open_structure is None:
            open_structure = Verdict(
                UNKNOWN,
                reason=f"h^{p}(O_X) is only bounded: {v}",
                witness=(0, p, 0),
                witness_dim=v,
            )
    pre = pre_k_du_bois(spec, k)
    if pre.status == NO:
        return Verdict(
            NO,
            reason="pre-level vanishing fails: " + pre.reason,
            witness=pre.witness,
            witness_dim=pre.witness_dim,
        )
    if open_structure is not None:
        return open_structure
    if pre.status == UNKNOWN:
        return pre
    return Verdict(YES, reason="pre-level vanishing, codimension bound and h^p(O_X) = 0 all hold")


def pre_k_rational(spec: ConeSpec, k: int) -> Verdict:
    """Level-k pre-rationality of the cone.

    For k <= n this asks h^i(Omega^p x L^m) = 0 for i >= 1, m >= 0, p <= k,
    except at (m, i) = (0, p) where the cup-product chain must consist of
    isomorphisms; level n certified implies level n + 1.  Levels beyond
    n + 1 are outside the criterion's range and raise OutOfRange.
    """
    n = spec.n
    if k < 0 or k > n + 1:
        raise OutOfRange(f"the pre-rational criterion covers 0 <= k <= {n + 1}")
    if spec.smooth_total_space:
        return Verdict(YES, reason="total space is smooth")
    level = min(k, n)
    cup_status, cup_detail = spec.model.cup_chain(level)
    if cup_status == NO:
        return Verdict(NO, reason="cup-product chain refuted: " + cup_detail)
    scan = _vanishing_scan(spec, level, m_start=0, skip_diagonal=True)
    if scan.status in (NO, UNKNOWN):
        return scan
    if cup_status == UNKNOWN:
        return Verdict(UNKNOWN, reason="cup-product chain not certified: " + cup_detail)
    reason = "vanishing holds away from the diagonal and the cup-product chain is certified"
    if k == n + 1:
        reason += f" (level {n} extends to level {n + 1})"
    return Verdict(YES, reason=reason)


def k_rational(spec: ConeSpec, k: int) -> Verdict:
    """Level-k rationality: pre-level-k rational together with 2k < dim X."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if spec.smooth_total_space:
        return Verdict(YES, reason="total space is smooth")
    n = spec.n
    if 2 * k >= n:
        return Verdict(
            NO,
            reason=f"codimension bound fails: singular locus has codimension {n + 1} <= {2 * k + 1}",
        )
    pre = pre_k_rational(spec, k)
    if pre.status == YES:
        return Verdict(YES, reason="pre-level rational and the codimension bound holds")
    prefix = "pre-level rationality fails: " if pre.status == NO else "pre-level rationality undetermined: "
    return Verdict(pre.status, reason=prefix + pre.reason, witness=pre.witness, witness_dim=pre.witness_dim)


def h0_reflexive(spec: ConeSpec, p: int) -> Verdict:
    """Reflexivity of the degree-0 cohomology of the p-th Du Bois piece,
    valid for 1 <= p <= dim X - 1: it holds iff h^0(Omega^p_X) = 0."""
    n = spec.n
    if not 1 <= p <= n - 1:
        raise CriterionRangeExceeded(
            f"the reflexivity criterion is valid for 1 <= p <= {n - 1}"
        )
    v = spec.model.hdim(p, 0, 0)
    if v.is_zero:
        return Verdict(YES, reason=f"h^0(Omega^{p}_X) = 0")
    if v.is_nonzero:
        return Verdict(
            NO,
            reason=f"h^0(Omega^{p}_X) = {v} is nonzero",
            witness=(p, 0, 0),
            witness_dim=v,
        )
    return Verdict(UNKNOWN, reason=f"h^0(Omega^{p}_X) is only bounded: {v}", witness=(p, 0, 0), witness_dim=v)


@dataclass(frozen=True)
class GradedTable:
    """Per-degree dimensions of H^i of the p-th Du Bois graded piece.

    For p >= 1 the degree-m entry is hdim(p, i, m) + hdim(p-1, i, m); for
    p = 0 it is hdim(0, i, m).  The (p, i) = (0, 0) table is the Hilbert
    function of the section ring and starts at m = 0.  tail_certified means
    every entry beyond the table is exactly zero.
    """

    p: int
    i: int
    m_start: int
    entries: Tuple[DimValue, ...]
    tail_certified: bool


def du_bois_graded_table(spec: ConeSpec, p: int, i: int, m_max: int) -> GradedTable:
    if not 0 <= p <= spec.total_dim:
        raise ValueError(f"p must lie between 0 and {spec.total_dim}")
    if i < 0 or m_max < 1:
        raise ValueError("need i >= 0 and m_max >= 1")
    model = spec.model
    if p == 0 and i == 0:
        entries = tuple(
            DimValue.exact(hilbert_function(model, m)) for m in range(0, m_max + 1)
        )
        return GradedTable(p, i, 0, entries, tail_certified=False)
    entries = []
    for m in range(1, m_max + 1):
        v = model.hdim(p, i, m)
        if p >= 1:
            v = v + model.hdim(p - 1, i, m)
        entries.append(v)
    bound = model.vanishing_bound(p, i)
    certified = bound is not None and bound <= m_max + 1
    if p >= 1 and certified:
        lower = model.vanishing_bound(p - 1, i)
        certified = lower is not None and lower <= m_max + 1
    return GradedTable(p, i, 1, tuple(entries), tail_certified=certified)


NOTIONS = ("pre_k_du_bois", "k_du_bois", "pre_k_rational", "k_rational")


@dataclass(frozen=True)
class SingularityReport:
    """Per-level verdicts for the four notions, with derived maxima and
    the results of the cross-notion consistency checks."""

    k_max: int
    pre_k_du_bois: Tuple[Verdict, ...]
    k_du_bois: Tuple[Verdict, ...]
    pre_k_rational: Tuple[Verdict, ...]
    k_rational: Tuple[Verdict, ...]
    maxima: Tuple[Tuple[str, Count], ...]
    consistency_failures: Tuple[str, ...]
    notes: Tuple[str, ...] = field(default=())

    def verdicts(self, notion: str) -> Tuple[Verdict, ...]:
        return getattr(self, notion)

    def maximum(self, notion: str) -> Count:
        return dict(self.maxima)[notion]


def _largest_yes(verdicts: Tuple[Verdict, ...]) -> Count:
    best: Count = None
    for k, v in enumerate(verdicts):
        if v.status == YES:
            best = k
    return best


def full_report(spec: ConeSpec, k_max: int) -> SingularityReport:
    """Evaluate all four notions for k = 0..k_max and cross-check them.

    Recorded consistency failures: a level that is pre-rational but not
    pre-Du-Bois, a level that is rational but not Du Bois, and any verdict
    array where a "yes" sits above a "no".  All are empty on catalog models.
    """
    if k_max < 0 or k_max > spec.n + 1:
        raise OutOfRange(f"full_report covers 0 <= k_max <= {spec.n + 1}")
    arrays = {
        "pre_k_du_bois": tuple(pre_k_du_bois(spec, k) for k in range(k_max + 1)),
        "k_du_bois": tuple(k_du_bois(spec, k) for k in range(k_max + 1)),
        "pre_k_rational": tuple(pre_k_rational(spec, k) for k in range(k_max + 1)),
        "k_rational": tuple(k_rational(spec, k) for k in range(k_max + 1)),
    }
    failures = []
    for k in range(k_max + 1):
        if arrays["pre_k_rational"][k].status == YES and arrays["pre_k_du_bois"][k].status == NO:
            failures.append(f"k={k}: pre-rational holds but pre-Du-Bois fails")
        if arrays["k_rational"][k].status == YES and arrays["k_du_bois"][k].status == NO:
            failures.append(f"k={k}: rational holds but Du Bois fails")
    for notion, verdicts in arrays.items():
        seen_no = None
        for k, v in enumerate(verdicts):
            if v.status == NO and seen_no is None:
                seen_no = k
            if v.status == YES and seen_no is not None:
                failures.append(f"{notion}: yes at k={k} after no at k={seen_no}")
    maxima = tuple(
        (notion, inf if spec.smooth_total_space else _largest_yes(arrays[notion]))
        for notion in NOTIONS
    )
    notes = (
        "the cone over a smooth projective base with ample polarisation is normal, "
        "so the seminormality and normality preconditions hold automatically",
    )
    return SingularityReport(
        k_max=k_max,
        pre_k_du_bois=arrays["pre_k_du_bois"],
        k_du_bois=arrays["k_du_bois"],
        pre_k_rational=arrays["pre_k_rational"],
        k_rational=arrays["k_rational"],
        maxima=maxima,
        consistency_failures=tuple(failures),
        notes=notes,
    )
