"""Input schema, report assembly, and serialization.

One input file describes one variety, either by a toric cone (ambient rank
and rays) or by a catalogued cone base with its parameters.  The produced
report document is a plain dict with a fixed field order, so serializing
the same input with the same tool version is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import inf
from typing import Any, Dict, List, Optional, Tuple

from ._version import __version__
from .cohomology import (
    CohomologyModel,
    DimValue,
    hodge_diamond,
    hypersurface_surface_model,
    veronese_model,
)
from .cones import (
    NOTIONS,
    UNKNOWN,
    ConeSpec,
    Verdict,
    du_bois_graded_table,
    full_report,
)
from .toric import classify_toric, faces, toric_verdict_rows, validate_cone

DEFAULT_M_MAX = 6


class SchemaError(ValueError):
    """Input document violates the schema; carries field path and reason."""

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}")


@dataclass(frozen=True)
class VarietySpecFile:
    """Validated description of one variety."""

    kind: str
    ambient_rank: Optional[int] = None
    rays: Optional[Tuple[Tuple[int, ...], ...]] = None
    base: Optional[str] = None
    r: Optional[int] = None
    d: Optional[int] = None
    degree: Optional[int] = None
    twist: Optional[int] = None
    k_max: Optional[int] = None
    m_max: Optional[int] = None


def _require_int(data: Dict[str, Any], key: str, minimum: int) -> int:
    if key not in data:
        raise SchemaError(key, "missing required field")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(key, "must be an exact integer")
    if value < minimum:
        raise SchemaError(key, f"must be >= {minimum}")
    return value


def _optional_int(data: Dict[str, Any], key: str, minimum: int) -> Optional[int]:
    if key not in data:
        return None
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(key, "must be an exact integer")
    if value < minimum:
        raise SchemaError(key, f"must be >= {minimum}")
    return value


def spec_from_mapping(data: Any) -> VarietySpecFile:
    """Validate a decoded JSON/TOML mapping into a VarietySpecFile."""
    if not isinstance(data, dict):
        raise SchemaError("$", "top-level value must be an object")
    kind = data.get("kind")
    if kind not in ("toric", "cone"):
        raise SchemaError("kind", "must be 'toric' or 'cone'")
    if kind == "toric":
        allowed = {"kind", "ambient_rank", "rays", "k_max"}
        for key in data:
            if key not in allowed:
                raise SchemaError(key, "unknown field for a toric spec")
        rank = _require_int(data, "ambient_rank", 1)
        rays = data.get("rays")
        if not isinstance(rays, list):
            raise SchemaError("rays", "must be a list of integer vectors")
        parsed: List[Tuple[int, ...]] = []
        for idx, ray in enumerate(rays):
            if not isinstance(ray, list) or len(ray) != rank:
                raise SchemaError(f"rays[{idx}]", f"must be a list of {rank} integers")
            for jdx, x in enumerate(ray):
                if isinstance(x, bool) or not isinstance(x, int):
                    raise SchemaError(f"rays[{idx}][{jdx}]", "must be an exact integer")
            parsed.append(tuple(ray))
        k_max = _optional_int(data, "k_max", 0)
        return VarietySpecFile(
            kind="toric", ambient_rank=rank, rays=tuple(parsed), k_max=k_max
        )

    base = data.get("base")
    if base == "projective_space":
        allowed = {"kind", "base", "r", "d", "k_max", "m_max"}
        for key in data:
            if key not in allowed:
                raise SchemaError(key, "unknown field for a projective_space spec")
        r = _require_int(data, "r", 1)
        d = _require_int(data, "d", 1)
        base_dim = r
        spec = VarietySpecFile(
            kind="cone",
            base=base,
            r=r,
            d=d,
            k_max=_optional_int(data, "k_max", 0),
            m_max=_optional_int(data, "m_max", 1),
        )
    elif base == "hypersurface_surface":
        allowed = {"kind", "base", "degree", "twist", "k_max", "m_max"}
        for key in data:
            if key not in allowed:
                raise SchemaError(key, "unknown field for a hypersurface_surface spec")
        degree = _require_int(data, "degree", 1)
        twist = _require_int(data, "twist", 1)
        base_dim = 2
        spec = VarietySpecFile(
            kind="cone",
            base=base,
            degree=degree,
            twist=twist,
            k_max=_optional_int(data, "k_max", 0),
            m_max=_optional_int(data, "m_max", 1),
        )
    else:
        raise SchemaError("base", "must be 'projective_space' or 'hypersurface_surface'")
    if spec.k_max is not None and spec.k_max > base_dim + 1:
        raise SchemaError("k_max", f"must be <= base_dim + 1 = {base_dim + 1}")
    return spec


def spec_to_mapping(spec: VarietySpecFile) -> Dict[str, Any]:
    """Inverse of spec_from_mapping on validated specs (round-trip safe)."""
    out: Dict[str, Any] = {"kind": spec.kind}
    if spec.kind == "toric":
        out["ambient_rank"] = spec.ambient_rank
        out["rays"] = [list(ray) for ray in spec.rays]
    else:
        out["base"] = spec.base
        if spec.base == "projective_space":
            out["r"] = spec.r
            out["d"] = spec.d
        else:
            out["degree"] = spec.degree
            out["twist"] = spec.twist
    if spec.k_max is not None:
        out["k_max"] = spec.k_max
    if spec.m_max is not None:
        out["m_max"] = spec.m_max
    return out


def parse_spec(text: str) -> VarietySpecFile:
    """Parse and validate a JSON variety description."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from exc
    return spec_from_mapping(data)


def parse_spec_toml(text: str) -> VarietySpecFile:
    """Parse and validate a TOML variety description (same field names)."""
    try:
        import tomllib  # Python >= 3.11
    except ModuleNotFoundError:  # pragma: no cover - depends on interpreter
        import tomli as tomllib
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise SchemaError("$", f"invalid TOML: {exc}") from exc
    return spec_from_mapping(data)


def _count_value(value) -> Any:
    if value is None:
        return None
    if value == inf:
        return "infinity"
    return int(value)


def _dim_value(v: DimValue) -> Any:
    if v.is_exact:
        return v.lo
    return {"lo": v.lo, "hi": "infinity" if v.hi is None else v.hi}


def _verdict_row(k: int, v: Verdict) -> Dict[str, Any]:
    row: Dict[str, Any] = {"k": k, "status": v.status, "reason": v.reason}
    if v.witness is not None:
        p, i, m = v.witness
        row["witness"] = {"p": p, "i": i, "m": m, "dim": _dim_value(v.witness_dim)}
    return row


def _build_model(spec: VarietySpecFile) -> CohomologyModel:
    if spec.base == "projective_space":
        return veronese_model(spec.r, spec.d)
    return hypersurface_surface_model(spec.degree, spec.twist)


def run(
    spec: VarietySpecFile,
    k_max_override: Optional[int] = None,
    m_max_override: Optional[int] = None,
) -> Dict[str, Any]:
    """Dispatch a validated spec and assemble the report document.

    Exit-code contract for consumers: 0 when every requested verdict is
    decided, 3 when at least one is unknown (see `unknown_verdicts` in the
    document), 2 for input errors (raised before a document exists).
    """
    doc: Dict[str, Any] = {
        "tool": {"name": "dubois", "version": __version__},
        "input": spec_to_mapping(spec),
        "kind": spec.kind,
    }
    if spec.kind == "toric":
        cone = validate_cone(spec.rays, spec.ambient_rank)
        verdict = classify_toric(cone)
        k_max = k_max_override if k_max_override is not None else spec.k_max
        if k_max is None:
            k_max = spec.ambient_rank
        if k_max > 64:
            # every toric verdict is constant far below this; refuse absurd tables
            raise SchemaError("k_max", "must be <= 64 for toric inputs")
        rows = toric_verdict_rows(verdict, k_max)
        unknown = sum(1 for arr in rows.values() for row in arr if row["status"] == UNKNOWN)
        doc["toric"] = {
            "ambient_rank": cone.ambient_rank,
            "rays": [list(ray) for ray in cone.rays],
            "is_simplicial": verdict.is_simplicial,
            "singular_locus_codim": _count_value(verdict.singular_codim),
            "face_count": len(faces(cone)),
            "maxima": {
                "pre_k_du_bois": _count_value(verdict.pre_k_du_bois_max),
                "k_du_bois": _count_value(verdict.k_du_bois_max),
                "pre_k_rational": _count_value(verdict.pre_k_rational_max),
                "k_rational": _count_value(verdict.k_rational_max),
            },
            "k_max": k_max,
            "verdicts": rows,
        }
        doc["unknown_verdicts"] = unknown
        return doc

    model = _build_model(spec)
    cone_spec = ConeSpec.for_model(model)
    k_max = k_max_override if k_max_override is not None else spec.k_max
    if k_max is None:
        k_max = cone_spec.n + 1
    if not 0 <= k_max <= cone_spec.n + 1:
        raise SchemaError("k_max", f"must be <= base_dim + 1 = {cone_spec.n + 1}")
    m_max = m_max_override if m_max_override is not None else spec.m_max
    if m_max is None:
        m_max = DEFAULT_M_MAX
    report = full_report(cone_spec, k_max)
    unknown = sum(
        1
        for notion in NOTIONS
        for v in report.verdicts(notion)
        if v.status == UNKNOWN
    )
    diamond = hodge_diamond(model)
    tables = []
    for p in range(0, cone_spec.total_dim + 1):
        for i in range(0, cone_spec.n + 1):
            t = du_bois_graded_table(cone_spec, p, i, m_max)
            tables.append(
                {
                    "p": t.p,
                    "i": t.i,
                    "m_start": t.m_start,
                    "entries": [_dim_value(v) for v in t.entries],
                    "tail_certified": t.tail_certified,
                }
            )
    doc["cone"] = {
        "description": model.description,
        "base_dim": cone_spec.n,
        "total_dim": cone_spec.total_dim,
        "smooth_total_space": cone_spec.smooth_total_space,
        "k_max": k_max,
        "m_max": m_max,
        "maxima": {notion: _count_value(value) for notion, value in report.maxima},
        "verdicts": {
            notion: [
                _verdict_row(k, v) for k, v in enumerate(report.verdicts(notion))
            ]
            for notion in NOTIONS
        },
        "consistency_failures": list(report.consistency_failures),
        "notes": list(report.notes),
        "hodge_diamond": [[_dim_value(v) for v in row] for row in diamond.entries],
        "graded_tables": tables,
    }
    doc["unknown_verdicts"] = unknown
    return doc


def render_json(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def _format_dim(value: Any) -> str:
    if isinstance(value, dict):
        hi = value["hi"]
        return f"{value['lo']}..{hi}"
    return str(value)


def render_text(doc: Dict[str, Any]) -> str:
    lines: List[str] = []
    tool = doc["tool"]
    lines.append(f"{tool['name']} {tool['version']} report")
    if doc["kind"] == "toric":
        body = doc["toric"]
        lines.append("kind: affine toric variety")
        lines.append(f"ambient rank: {body['ambient_rank']}")
        lines.append(f"rays (primitivised): {body['rays']}")
        lines.append(f"simplicial: {body['is_simplicial']}")
        lines.append(f"singular locus codimension: {body['singular_locus_codim']}")
        lines.append(f"faces: {body['face_count']}")
    else:
        body = doc["cone"]
        lines.append(f"kind: affine cone over {body['description']}")
        lines.append(f"base dimension: {body['base_dim']} (cone dimension {body['total_dim']})")
        lines.append(f"smooth total space: {body['smooth_total_space']}")
    lines.append("maxima:")
    for notion, value in body["maxima"].items():
        shown = "none" if value is None else value
        lines.append(f"  {notion}: {shown}")
    lines.append("verdicts (k: pre-du-bois du-bois pre-rational rational):")
    verdicts = body["verdicts"]
    for k in range(body["k_max"] + 1):
        cells = [verdicts[notion][k]["status"] for notion in NOTIONS]
        lines.append(f"  {k}: " + "  ".join(f"{c:<8}" for c in cells).rstrip())
    for notion in NOTIONS:
        for row in verdicts[notion]:
            if row["status"] != "yes" and row["reason"]:
                lines.append(f"  [{notion} k={row['k']}] {row['reason']}")
    if doc["kind"] == "cone":
        if body["consistency_failures"]:
            lines.append("consistency failures:")
            for item in body["consistency_failures"]:
                lines.append(f"  {item}")
        else:
            lines.append("consistency checks: all passed")
        lines.append("graded piece tables (rows m = m_start..):")
        for t in body["graded_tables"]:
            entries = " ".join(_format_dim(e) for e in t["entries"])
            tail = " ⋯ 0 (certified)" if t["tail_certified"] else " ⋯ (uncertified tail)"
            lines.append(f"  p={t['p']} i={t['i']} m>={t['m_start']}: {entries}{tail}")
    lines.append(f"unknown verdicts: {doc['unknown_verdicts']}")
    return "\n".join(lines) + "\n"


def exit_code(doc: Dict[str, Any]) -> int:
    return 3 if doc.get("unknown_verdicts", 0) else 0
