"""Built-in invariant suites, runnable from the CLI via --self-check.

Each suite returns (ok, detail); run_self_check prints one line per suite
and returns a process exit code.  The fixture lists are shared with the
test suite.
"""

from __future__ import annotations

import random
import sys
from math import comb, inf
from typing import Callable, List, Tuple

from .cohomology import (
    bott,
    euler_char_omega,
    hodge_diamond,
    hypersurface_surface_model,
    veronese_model,
)
from .cones import NO, NOTIONS, YES, ConeSpec, full_report
from .intlinalg import IntegerMatrix, smith_normal_form
from .toric import classify_toric, toric_verdict_rows, validate_cone

SNF_SAMPLES = 500
SNF_SEED = 20240801

TORIC_FIXTURES = (
    ("quadric cone", [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)], 3),
    ("A1 cone", [(1, 0), (1, 2)], 2),
    ("smooth plane cone", [(1, 0), (0, 1)], 2),
    ("smooth space cone", [(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3),
    ("simplicial boundary cone", [(1, 0, 0), (0, 1, 0), (1, 1, 2)], 3),
    ("single ray", [(1, 2)], 2),
)


def catalog_cone_specs() -> List[Tuple[str, ConeSpec]]:
    specs = []
    for r in range(1, 5):
        for d in range(1, 4):
            specs.append((f"veronese r={r} d={d}", ConeSpec.for_model(veronese_model(r, d))))
    for d in range(1, 6):
        for l in range(1, 4):
            specs.append(
                (f"hypersurface d={d} l={l}", ConeSpec.for_model(hypersurface_surface_model(d, l)))
            )
    for l in (4, 5, 6):
        specs.append(
            (f"hypersurface d=4 l={l}", ConeSpec.for_model(hypersurface_surface_model(4, l)))
        )
    return specs


def check_snf_reconstruction() -> Tuple[bool, str]:
    """U*M*V == D, divisibility chain and nonnegative diagonal on random input."""
    rng = random.Random(SNF_SEED)
    for trial in range(SNF_SAMPLES):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        mat = IntegerMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        )
        snf = smith_normal_form(mat)
        if (snf.U @ mat @ snf.V).entries != snf.D.entries:
            return False, f"reconstruction failed on sample {trial}"
        diag = snf.D.diagonal()
        if any(d < 0 for d in diag):
            return False, f"negative invariant factor on sample {trial}"
        for a, b in zip(diag, diag[1:]):
            if a == 0 and b != 0:
                return False, f"zero before nonzero factor on sample {trial}"
            if a != 0 and b % a != 0:
                return False, f"divisibility chain broken on sample {trial}"
        flat = snf.D.entries
        for i in range(snf.D.rows):
            for j in range(snf.D.cols):
                if i != j and flat[i * snf.D.cols + j] != 0:
                    return False, f"off-diagonal entry on sample {trial}"
    return True, f"{SNF_SAMPLES} random matrices reconstructed"


def check_bott_grid() -> Tuple[bool, str]:
    """Bott formula vs the Euler-characteristic recursion, Serre duality and
    positivity vanishing on the full grid n <= 4, |m| <= 12."""
    checked = 0
    for n in range(1, 5):
        for p in range(n + 1):
            for m in range(-12, 13):
                alternating = sum((-1) ** q * bott(n, p, q, m) for q in range(n + 1))
                if alternating != euler_char_omega(n, p, m):
                    return False, f"chi mismatch at (n={n}, p={p}, m={m})"
                for q in range(n + 1):
                    if bott(n, p, q, m) != bott(n, n - p, n - q, -m):
                        return False, f"Serre duality fails at (n={n}, p={p}, q={q}, m={m})"
                    if q >= 1 and m >= 1 and bott(n, p, q, m) != 0:
                        return False, f"positive-twist vanishing fails at (n={n}, p={p}, q={q}, m={m})"
                    checked += 1
    return True, f"{checked} grid points consistent"


def check_hodge_symmetry() -> Tuple[bool, str]:
    """Both diamond symmetries on every catalog model, where entries are exact,
    plus the arithmetic-genus formula for hypersurfaces."""
    count = 0
    for name, spec in catalog_cone_specs():
        model = spec.model
        n = model.base_dim
        diamond = hodge_diamond(model).entries
        for p in range(n + 1):
            for q in range(n + 1):
                a = diamond[p][q]
                b = diamond[q][p]
                c = diamond[n - p][n - q]
                if a.is_exact and b.is_exact and a != b:
                    return False, f"{name}: h^({p},{q}) != h^({q},{p})"
                if a.is_exact and c.is_exact and a != c:
                    return False, f"{name}: h^({p},{q}) != h^({n-p},{n-q})"
                count += 1
        if name.startswith("hypersurface"):
            d = model.d
            chi = sum((-1) ** q * model.hdim(0, q, 0).value for q in range(n + 1))
            expected = 1 + (comb(d - 1, 3) if d - 1 >= 3 else 0)
            if chi != expected:
                return False, f"{name}: chi(O_X) = {chi}, expected {expected}"
    return True, f"{count} diamond entries symmetric"


def check_implications() -> Tuple[bool, str]:
    """Verdict-level implication lattice and monotonicity on all fixtures:
    pre-rational => pre-Du-Bois and rational => Du Bois at every level."""
    reports = 0
    for name, spec in catalog_cone_specs():
        rep = full_report(spec, spec.n + 1)
        if rep.consistency_failures:
            return False, f"{name}: {rep.consistency_failures[0]}"
        for k in range(rep.k_max + 1):
            if rep.pre_k_rational[k].status == YES and rep.pre_k_du_bois[k].status != YES:
                return False, f"{name}: pre-rational without pre-Du-Bois at k={k}"
            if rep.k_rational[k].status == YES and rep.k_du_bois[k].status != YES:
                return False, f"{name}: rational without Du Bois at k={k}"
        reports += 1
    for name, rays, rank in TORIC_FIXTURES:
        verdict = classify_toric(validate_cone(rays, rank))
        rows = toric_verdict_rows(verdict, rank + 1)
        for notion in NOTIONS:
            seen_no = False
            for row in rows[notion]:
                if row["status"] == NO:
                    seen_no = True
                if row["status"] == YES and seen_no:
                    return False, f"{name}: non-monotone {notion} array"
        for pre, strong in (
            ("pre_k_du_bois", "k_du_bois"),
            ("pre_k_rational", "k_rational"),
        ):
            for k in range(rank + 2):
                if rows[strong][k]["status"] == YES and rows[pre][k]["status"] == NO:
                    return False, f"{name}: {strong} without {pre} at k={k}"
        if verdict.k_du_bois_max != inf and verdict.k_rational_max != inf:
            if verdict.k_du_bois_max < verdict.k_rational_max:
                return False, f"{name}: k_du_bois_max < k_rational_max"
        reports += 1
    return True, f"{reports} fixture reports consistent"


def check_model_agreement() -> Tuple[bool, str]:
    """hypersurface(d=1, l) agrees with veronese(r=2, d=l) on every exact entry."""
    points = 0
    for l in range(1, 4):
        plane = hypersurface_surface_model(1, l)
        verofied = veronese_model(2, l)
        for p in range(3):
            for q in range(3):
                for m in range(-8, 9):
                    a = plane.hdim(p, q, m)
                    b = verofied.hdim(p, q, m)
                    if a.is_exact and b.is_exact and a != b:
                        return False, f"disagreement at (l={l}, p={p}, q={q}, m={m})"
                    points += 1
    return True, f"{points} grid points agree"


SUITES: Tuple[Tuple[str, Callable[[], Tuple[bool, str]]], ...] = (
    ("snf-reconstruction", check_snf_reconstruction),
    ("bott-euler-grid", check_bott_grid),
    ("hodge-symmetry", check_hodge_symmetry),
    ("implication-lattice", check_implications),
    ("model-agreement", check_model_agreement),
)


def run_self_check(stream=None) -> int:
    stream = stream or sys.stdout
    failures = 0
    for name, suite in SUITES:
        ok, detail = suite()
        mark = "ok" if ok else "FAIL"
        print(f"[{mark:>4}] {name}: {detail}", file=stream)
        if not ok:
            failures += 1
    if failures:
        print(f"self-check failed: {failures} suite(s)", file=stream)
        return 1
    print("self-check passed: all suites green", file=stream)
    return 0
