"""Exact linear-programming feasibility over the rationals.

A small phase-1 simplex with Bland's rule, used for supporting-functional
and cone-membership queries.  All arithmetic is fractions.Fraction, so a
returned witness satisfies the constraints exactly and "infeasible" is a
proof, not a tolerance call.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Row = Tuple[Sequence[int], int]


def solve_feasibility(
    num_vars: int,
    equalities: Sequence[Row],
    inequalities: Sequence[Row],
) -> Optional[List[Fraction]]:
    """Find x in Q^num_vars with a.x == b for every (a, b) in `equalities`
    and a.x >= b for every (a, b) in `inequalities`.

    Variables are free (may take any sign).  Returns a solution vector or
    None when the system is infeasible.
    """
    rows = [(list(a), Fraction(b), False) for a, b in equalities]
    rows += [(list(a), Fraction(b), True) for a, b in inequalities]
    m = len(rows)
    if m == 0:
        return [Fraction(0)] * num_vars
    for coeffs, _, _ in rows:
        if len(coeffs) != num_vars:
            raise ValueError("constraint width does not match num_vars")

    n_ge = sum(1 for _, _, is_ge in rows if is_ge)
    n_struct = 2 * num_vars + n_ge
    width = n_struct + m  # one artificial per row

    tableau: List[List[Fraction]] = []
    ge_seen = 0
    for r, (coeffs, rhs, is_ge) in enumerate(rows):
        row = [Fraction(0)] * (width + 1)
        for j, c in enumerate(coeffs):
            row[j] = Fraction(c)
            row[num_vars + j] = Fraction(-c)
        if is_ge:
            row[2 * num_vars + ge_seen] = Fraction(-1)
            ge_seen += 1
        row[width] = rhs
        if rhs < 0:
            row = [-x for x in row]
        row[n_struct + r] = Fraction(1)
        tableau.append(row)

    basis = [n_struct + r for r in range(m)]

    # Phase-1 objective: minimise the sum of the artificials.  The reduced
    # cost row starts as the column sums because every basic variable is
    # artificial with unit cost.
    obj = [Fraction(0)] * (width + 1)
    for j in range(width + 1):
        obj[j] = sum(tableau[i][j] for i in range(m))
    for j in range(n_struct, width):
        obj[j] -= 1

    while True:
        enter = None
        for j in range(width):
            if obj[j] > 0:
                enter = j
                break  # Bland: smallest improving index
        if enter is None:
            break
        leave = None
        best_ratio: Optional[Fraction] = None
        for i in range(m):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][width] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            raise RuntimeError("phase-1 objective unbounded; malformed tableau")
        _pivot(tableau, obj, leave, enter)
        basis[leave] = enter

    if obj[width] != 0:
        return None

    values = [Fraction(0)] * width
    for i, col in enumerate(basis):
        values[col] = tableau[i][width]
    return [values[j] - values[num_vars + j] for j in range(num_vars)]


def _pivot(tableau: List[List[Fraction]], obj: List[Fraction], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [x / piv for x in tableau[row]]
    for i in range(len(tableau)):
        if i != row and tableau[i][col]:
            factor = tableau[i][col]
            tableau[i] = [x - factor * y for x, y in zip(tableau[i], tableau[row])]
    if obj[col]:
        factor = obj[col]
        for j in range(len(obj)):
            obj[j] -= factor * tableau[row][j]
