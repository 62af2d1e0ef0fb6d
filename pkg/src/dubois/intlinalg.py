"""Exact integer linear algebra for lattice computations.

Everything in this module runs on arbitrary-precision Python integers; no
floating point appears anywhere.  The central routine is
:func:`smith_normal_form`, which returns a full decomposition U*M*V = D
with unimodular U and V.  The invariant factors it produces drive the
lattice smoothness test :func:`is_smooth_simplicial_cone`: a simplicial
cone is smooth exactly when its primitive ray generators extend to a basis
of the ambient lattice, i.e. when every invariant factor of the ray matrix
equals one.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Sequence, Tuple


class NonzeroRequired(ValueError):
    """Raised when an operation needs a nonzero vector."""


class NotSimplicial(ValueError):
    """Raised when rays expected to be linearly independent are not."""


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix, row-major, immutable.

    Entries are plain Python ints, so there is no overflow; shapes with
    zero rows or columns are rejected.
    """

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix needs at least one row and one column")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the declared shape")
        for e in self.entries:
            if isinstance(e, bool) or not isinstance(e, int):
                raise ValueError("entries must be exact integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(int(x) for r in rows for x in r)
        return cls(len(rows), width, flat)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.entry(i, i) for i in range(min(self.rows, self.cols)))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        a, b = self.to_rows(), other.to_rows()
        prod = [
            [sum(a[i][t] * b[t][j] for t in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntegerMatrix.from_rows(prod)


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular U, V and diagonal D with U*M*V = D.

    The diagonal of D is nonnegative, satisfies d1 | d2 | ... and has all
    zero entries at the tail.
    """

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    def invariant_factors(self) -> Tuple[int, ...]:
        return tuple(d for d in self.D.diagonal() if d != 0)


def _swap_rows(mat: List[List[int]], i: int, j: int) -> None:
    mat[i], mat[j] = mat[j], mat[i]


def _swap_cols(mat: List[List[int]], i: int, j: int) -> None:
    for row in mat:
        row[i], row[j] = row[j], row[i]


def _add_row(mat: List[List[int]], dst: int, src: int, factor: int) -> None:
    # row[dst] += factor * row[src]
    mat[dst] = [x + factor * y for x, y in zip(mat[dst], mat[src])]


def _add_col(mat: List[List[int]], dst: int, src: int, factor: int) -> None:
    for row in mat:
        row[dst] += factor * row[src]


def smith_normal_form(matrix: IntegerMatrix) -> SmithDecomposition:
    """Compute the Smith normal form of an integer matrix.

    Pivots are chosen as the minimal-absolute-value nonzero entry of the
    remaining block, which keeps intermediate entries small.  U and V are
    accumulated from the row and column operations, so the decomposition
    can be checked directly via U @ M @ V == D.

    >>> m = IntegerMatrix.from_rows([[2, 4], [6, 8]])
    >>> smith_normal_form(m).D.diagonal()
    (2, 4)
    """
    rows, cols = matrix.rows, matrix.cols
    a = matrix.to_rows()
    u = IntegerMatrix.identity(rows).to_rows()
    v = IntegerMatrix.identity(cols).to_rows()

    t = 0
    while t < min(rows, cols):
        # Re-select the smallest nonzero entry of the remaining block as the
        # pivot on every round; this keeps quotients, and hence entry
        # growth, small.  Every round below either finishes position t or
        # strictly shrinks that minimum, so the loop terminates.
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                val = abs(a[i][j])
                if val and (best is None or val < best):
                    pivot, best = (i, j), val
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            _swap_rows(a, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(a, t, pj)
            _swap_cols(v, t, pj)

        # One remainder pass over column t and row t.
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                if q:
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                if q:
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # Row and column t are clear; make the pivot divide the rest of
        # the block so the divisibility chain holds.
        offender = None
        for i in range(t + 1, rows):
            if any(a[i][j] % a[t][t] for j in range(t + 1, cols)):
                offender = i
                break
        if offender is not None:
            _add_row(a, t, offender, 1)
            _add_row(u, t, offender, 1)
            continue
        t += 1

    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    return SmithDecomposition(
        U=IntegerMatrix.from_rows(u),
        D=IntegerMatrix.from_rows(a),
        V=IntegerMatrix.from_rows(v),
    )


def invariant_factors(matrix: IntegerMatrix) -> Tuple[int, ...]:
    return smith_normal_form(matrix).invariant_factors()


def primitive_vector(vector: Iterable[int]) -> Tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries.

    The sign pattern is preserved: (-3, 6, 9) becomes (-1, 2, 3).
    """
    vec = tuple(int(x) for x in vector)
    g = gcd(*(abs(x) for x in vec)) if vec else 0
    if g == 0:
        raise NonzeroRequired("the zero vector has no primitive representative")
    return tuple(x // g for x in vec)


def lattice_rank(vectors: Sequence[Sequence[int]], ambient_rank: int) -> int:
    """Rank of the sublattice spanned by the given vectors."""
    if not vectors:
        return 0
    for vec in vectors:
        if len(vec) != ambient_rank:
            raise ValueError("vector length does not match the ambient rank")
    return len(invariant_factors(IntegerMatrix.from_rows(vectors)))


def is_smooth_simplicial_cone(rays: Sequence[Sequence[int]], ambient_rank: int) -> bool:
    """Decide smoothness of a simplicial cone from its primitive rays.

    The rays generate a saturated direct summand of the ambient lattice
    exactly when all invariant factors of the ray matrix are 1; working
    with the Smith form means the test is carried out inside the saturation
    of the spanned sublattice, as required for faces of higher codimension.
    """
    rays = [list(r) for r in rays]
    if not rays:
        return True
    for ray in rays:
        if len(ray) != ambient_rank:
            raise ValueError("ray length does not match the ambient rank")
    factors = invariant_factors(IntegerMatrix.from_rows(rays))
    if len(factors) < len(rays):
        raise NotSimplicial("rays are linearly dependent")
    return all(f == 1 for f in factors)
