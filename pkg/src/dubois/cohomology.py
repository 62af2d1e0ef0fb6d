"""Cohomology tables for the catalogued projective bases.

Two closed families of pairs (X, L) are modelled exactly:

* projective space P^r with L = O(d), dimensions given by the Bott formula;
* a smooth surface X of degree d in P^3 with L = O_X(l), dimensions chased
  through the restriction of the Euler sequence and the conormal sequence.

A dimension is a three-valued :class:`DimValue`: exact, or an interval when
the rank of a connecting map is genuinely undetermined by the chase.  The
chase never guesses a rank.  Surjectivity and vanishing facts are hard-coded
only where they hold for structural reasons:

* multiplication by the coordinate forms is surjective on sections of
  O_X(j) for j >= 1 (X is projectively normal and the corresponding map on
  P^3 is onto);
* H^1 and H^2 of every line bundle on P^3 vanish, so h^1(O_X(j)) = 0 for
  every twist j;
* Akizuki-Nakano: h^q(Omega^p_X otimes ample) = 0 for p + q > dim X;
* on a smooth surface T_X otimes omega_X is the cotangent bundle, so Serre
  duality reads h^q(Omega^1_X(j)) = h^{2-q}(Omega^1_X(-j)).

Every formula is cross-checkable against the Euler-characteristic recursion
:func:`euler_char_omega`, which is independent of :func:`bott`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional, Tuple


class InvalidModel(ValueError):
    """Raised when catalog parameters are out of range."""


class InexactHilbert(ValueError):
    """Raised if a Hilbert-function value is not exact (never for the catalog)."""


@dataclass(frozen=True)
class DimValue:
    """Dimension of a cohomology group: exact, or an integer interval.

    lo == hi means the value is exact; hi is None for "no upper bound".
    Classification logic only ever consumes three facets of a DimValue:
    definitely zero, definitely nonzero (lo >= 1), or undetermined.
    """

    lo: int
    hi: Optional[int]

    def __post_init__(self) -> None:
        if self.lo < 0:
            raise ValueError("dimensions are nonnegative")
        if self.hi is not None and self.hi < self.lo:
            raise ValueError("empty dimension interval")

    @classmethod
    def exact(cls, n: int) -> "DimValue":
        return cls(n, n)

    @classmethod
    def bounded(cls, lo: int, hi: Optional[int]) -> "DimValue":
        return cls(lo, hi)

    @property
    def is_exact(self) -> bool:
        return self.hi == self.lo

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"dimension {self} is not exact")
        return self.lo

    @property
    def is_zero(self) -> bool:
        return self.hi == 0

    @property
    def is_nonzero(self) -> bool:
        return self.lo >= 1

    @property
    def is_undetermined(self) -> bool:
        return self.lo == 0 and (self.hi is None or self.hi > 0)

    def __add__(self, other: "DimValue") -> "DimValue":
        hi = None if self.hi is None or other.hi is None else self.hi + other.hi
        return DimValue(self.lo + other.lo, hi)

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        if self.hi is None:
            return f"{self.lo}.."
        return f"{self.lo}..{self.hi}"


ZERO = DimValue.exact(0)


def binom(a: int, b: int) -> int:
    """Binomial coefficient in the section-counting convention: 0 outside the
    combinatorial range (negative or too-small upper index)."""
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def poly_binom(a: int, b: int) -> int:
    """Binomial coefficient as a polynomial in the upper index: the falling
    factorial a(a-1)...(a-b+1)/b!, valid (and possibly negative) for any
    integer a.  This is the Euler-characteristic convention."""
    if b < 0:
        return 0
    num = 1
    for i in range(b):
        num *= a - i
    den = 1
    for i in range(1, b + 1):
        den *= i
    return num // den


def bott(n: int, p: int, q: int, m: int) -> int:
    """Dimension of H^q(P^n, Omega^p(m)) by the Bott formula.

    Out-of-range p or q yields 0.

    >>> bott(2, 1, 1, 0)
    1
    >>> bott(3, 1, 0, 2)
    6
    >>> bott(3, 0, 3, -5)
    4
    """
    if p < 0 or q < 0 or p > n or q > n:
        return 0
    if q == p and m == 0:
        return 1
    if q == 0 and m > p:
        return binom(m + n - p, m) * binom(m - 1, p)
    if q == n and m < p - n:
        return binom(-m + p, -m) * binom(-m - 1, n - p)
    return 0


def euler_char_omega(n: int, p: int, m: int) -> int:
    """Euler characteristic of Omega^p(m) on P^n.

    Computed by unrolling the recursion coming from the exterior powers of
    the Euler sequence,
    chi(Omega^p(m)) = C(n+1, p) chi(O(m-p)) - chi(Omega^{p-1}(m)),
    with the polynomial base case chi(O(m)) = C(m+n, n).  Independent of
    :func:`bott`, so the two can be checked against each other.
    """
    if p < 0 or p > n:
        return 0
    total = 0
    for s in range(p + 1):
        sign = -1 if (p - s) % 2 else 1
        total += sign * binom(n + 1, s) * poly_binom(m - s + n, n)
    return total


class CohomologyModel:
    """Exact dimension oracle h^q(X, Omega^p_X otimes L^m) for one pair (X, L).

    Concrete models fill in `_hdim` and `_vanishing_bound`.  `hdim` clamps
    out-of-range (p, q) to zero; `vanishing_bound(p, q)` returns the least
    M >= 1 such that hdim(p, q, m) is exactly zero for every m >= M, or
    None when no such certificate exists (growing section spaces).
    """

    base_dim: int
    description: str
    bott_vanishing_certificate: bool
    # c1(L) is a positive multiple of a hyperplane-type class with
    # nonvanishing powers; licenses a "yes" for the cup-product chain.
    cup_certificate: bool
    # catalog identity (P^r, O(1)): the cone is an affine space
    is_affine_space_cone: bool

    def hdim(self, p: int, q: int, m: int) -> DimValue:
        if p < 0 or q < 0 or p > self.base_dim or q > self.base_dim:
            return ZERO
        return self._hdim(p, q, m)

    def vanishing_bound(self, p: int, q: int) -> Optional[int]:
        if p < 0 or q < 0 or p > self.base_dim or q > self.base_dim:
            return 1
        return self._vanishing_bound(p, q)

    def _hdim(self, p: int, q: int, m: int) -> DimValue:
        raise NotImplementedError

    def _vanishing_bound(self, p: int, q: int) -> Optional[int]:
        raise NotImplementedError

    def cup_chain(self, k: int) -> Tuple[str, str]:
        """Certify ("yes"), refute ("no") or leave open ("unknown") that the
        cup-product maps H^0(O_X) -> H^1(Omega^1) -> ... -> H^k(Omega^k)
        are all isomorphisms.

        Only dimensions are consulted: a mismatch h^{j,j} != 1 below an
        exact-1 predecessor refutes the chain; a "yes" additionally needs
        the model's hyperplane-class certificate.  Cup products themselves
        are never computed.
        """
        if not 0 <= k <= self.base_dim:
            raise ValueError(f"cup chain is defined for 0 <= k <= {self.base_dim}")
        if k == 0:
            v = self.hdim(0, 0, 0)
            if v.is_exact and v.value == 1:
                return "yes", "the level-0 chain has no maps to certify"
            return "no", f"h^(0,0) = {v} is not one-dimensional"
        prev_exact_one = True
        all_exact_one = True
        for j in range(k + 1):
            v = self.hdim(j, j, 0)
            if v.is_exact and v.value == 1:
                prev_exact_one = True
                continue
            if v.is_exact and prev_exact_one:
                return "no", f"h^({j},{j}) = {v} breaks the chain of isomorphisms from h^(0,0) = 1"
            prev_exact_one = False
            all_exact_one = False
        if all_exact_one and self.cup_certificate:
            return (
                "yes",
                "h^(j,j) = 1 for j <= k and c1(L) is a positive multiple of the hyperplane class",
            )
        return "unknown", "diagonal Hodge numbers alone cannot certify the cup maps"


class VeroneseModel(CohomologyModel):
    """P^r polarised by O(d); all dimensions come from the Bott formula."""

    def __init__(self, r: int, d: int):
        self.r = r
        self.d = d
        self.base_dim = r
        self.description = f"projective space P^{r} with L = O({d})"
        self.bott_vanishing_certificate = True
        self.cup_certificate = True
        self.is_affine_space_cone = d == 1

    def _hdim(self, p: int, q: int, m: int) -> DimValue:
        return DimValue.exact(bott(self.r, p, q, m * self.d))

    def _vanishing_bound(self, p: int, q: int) -> Optional[int]:
        if q >= 1:
            return 1  # Bott vanishing: positive twists kill all higher cohomology
        return None  # sections grow without bound

    def __repr__(self) -> str:
        return f"VeroneseModel(r={self.r}, d={self.d})"


def veronese_model(r: int, d: int) -> VeroneseModel:
    """Catalog entry for P^r with L = O(d); requires r >= 1 and d >= 1."""
    if r < 1 or d < 1:
        raise InvalidModel("veronese model needs r >= 1 and d >= 1")
    return VeroneseModel(r, d)


# --- smooth surfaces in P^3 -------------------------------------------------

@lru_cache(maxsize=None)
def _sections(d: int, j: int) -> int:
    """h^0(O_X(j)) for a smooth degree-d surface X in P^3."""
    return binom(j + 3, 3) - binom(j - d + 3, 3)


@lru_cache(maxsize=None)
def _chi_line(d: int, j: int) -> int:
    """chi(O_X(j)), polynomial convention (valid for any j)."""
    return poly_binom(j + 3, 3) - poly_binom(j - d + 3, 3)


def _h_line(d: int, j: int, q: int) -> int:
    """h^q(O_X(j)); exact for every twist.

    h^1 vanishes for all j because both H^1(O_{P^3}(j)) and
    H^2(O_{P^3}(j-d)) vanish; h^2 is Serre-dual to sections of O_X(d-4-j).
    """
    if q == 0:
        return _sections(d, j)
    if q == 1:
        return 0
    if q == 2:
        return _sections(d, d - 4 - j)
    return 0


def _chi_omega1(d: int, j: int) -> int:
    """chi(Omega^1_X(j)) via additivity over the two defining sequences."""
    return 4 * _chi_line(d, j - 1) - _chi_line(d, j) - _chi_line(d, j - d)


@lru_cache(maxsize=None)
def _h_omega1(d: int, j: int, q: int) -> DimValue:
    """h^q(Omega^1_X(j)) by the Euler/conormal chase.

    Writing E = Omega^1_{P^3}|_X, the two sequences are

        0 -> E(j) -> O_X(j-1)^4 -> O_X(j) -> 0
        0 -> O_X(j-d) -> E(j) -> Omega^1_X(j) -> 0

    For j >= 1 the first sequence determines E(j) exactly; in the second
    the only unknown is the rank of the connecting map
    H^2(O_X(j-d)) -> H^2(E(j)), so h^1 is exact whenever source or target
    vanishes and an interval otherwise.  Negative twists go through Serre
    duality, and the untwisted row is completed by the Euler
    characteristic (h^0 and h^2 both vanish at j = 0).
    """
    if q < 0 or q > 2:
        return ZERO
    if j < 0:
        return _h_omega1(d, -j, 2 - q)
    if q == 0:
        if j == 0:
            return ZERO  # surfaces in P^3 carry no global 1-forms
        h0_euler = 4 * _sections(d, j - 1) - _sections(d, j)
        val = h0_euler - _sections(d, j - d)
        assert val >= 0
        return DimValue.exact(val)
    if q == 2:
        # j >= 1: Akizuki-Nakano (p + q = 3 > 2); j = 0: dual to q = 0.
        return ZERO
    # q == 1
    if j == 0:
        h11 = -_chi_omega1(d, 0)
        assert h11 >= 0
        return DimValue.exact(h11)
    source = _h_line(d, j - d, 2)
    target = 4 * _h_line(d, j - 1, 2) - _h_line(d, j, 2)
    assert target >= 0
    if source == 0:
        return ZERO
    if target == 0:
        return DimValue.exact(source)
    return DimValue.bounded(max(0, source - target), source)


class HypersurfaceSurfaceModel(CohomologyModel):
    """Smooth degree-d surface in P^3 polarised by O_X(l).

    hdim(p, q, m) is evaluated at the twist j = l*m.
    """

    def __init__(self, d: int, l: int):
        self.d = d
        self.l = l
        self.base_dim = 2
        self.description = f"smooth degree-{d} surface in P^3 with L = O({l})"
        # for d <= 2 the surface is a plane or a smooth quadric (toric);
        # from d = 3 on, h^1(Omega^1_X(1)) is nonzero
        self.bott_vanishing_certificate = d <= 2
        # a degree-1 "surface" is a plane, so L is l times its hyperplane class
        self.cup_certificate = d == 1
        self.is_affine_space_cone = d == 1 and l == 1

    def _hdim(self, p: int, q: int, m: int) -> DimValue:
        j = self.l * m
        if p == 0:
            return DimValue.exact(_h_line(self.d, j, q))
        if p == 1:
            return _h_omega1(self.d, j, q)
        # p == 2: adjunction, Omega^2_X = O_X(d - 4)
        return DimValue.exact(_h_line(self.d, j + self.d - 4, q))

    def _vanishing_bound(self, p: int, q: int) -> Optional[int]:
        if q == 0:
            return None  # section spaces grow
        if p + q > 2:
            return 1  # Akizuki-Nakano for every positive twist
        if p == 0:
            if q == 1:
                return 1
            # q == 2: h^2(O_X(lm)) = 0 once lm > d - 4
            return max(1, _ceil_div(self.d - 3, self.l))
        # p == q == 1: zero once lm >= 2d - 3
        return max(1, _ceil_div(2 * self.d - 3, self.l))

    def __repr__(self) -> str:
        return f"HypersurfaceSurfaceModel(d={self.d}, l={self.l})"


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def hypersurface_surface_model(d: int, l: int) -> HypersurfaceSurfaceModel:
    """Catalog entry for a smooth degree-d surface in P^3 with L = O(l)."""
    if d < 1 or l < 1:
        raise InvalidModel("hypersurface model needs degree >= 1 and twist >= 1")
    return HypersurfaceSurfaceModel(d, l)


def hilbert_function(model: CohomologyModel, m: int) -> int:
    """Dimension of the degree-m piece of the section ring of (X, L).

    >>> hilbert_function(veronese_model(2, 2), 1)
    6
    """
    if m < 0:
        raise ValueError("the section ring lives in nonnegative degrees")
    v = model.hdim(0, 0, m)
    if not v.is_exact:
        raise InexactHilbert(f"h^0(L^{m}) is only bounded: {v}")
    return v.value


@dataclass(frozen=True)
class HodgeDiamond:
    """The m = 0 slice h^{p,q} = hdim(p, q, 0), indexed entries[p][q]."""

    entries: Tuple[Tuple[DimValue, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)


def hodge_diamond(model: CohomologyModel) -> HodgeDiamond:
    n = model.base_dim
    return HodgeDiamond(
        tuple(tuple(model.hdim(p, q, 0) for q in range(n + 1)) for p in range(n + 1))
    )
