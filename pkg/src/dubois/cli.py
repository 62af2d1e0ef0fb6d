"""Command-line front end.

One invocation processes one variety description (JSON, or TOML by file
extension) and writes the report to stdout.  Exit codes: 0 when every
requested verdict is decided, 3 when at least one is unknown, 2 on input
errors.  --self-check runs the built-in invariant suites instead.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .cohomology import InvalidModel
from .cones import CriterionRangeExceeded, OutOfRange
from .intlinalg import NonzeroRequired, NotSimplicial
from .report import (
    SchemaError,
    exit_code,
    parse_spec,
    parse_spec_toml,
    render_json,
    render_text,
    run,
)
from .selfcheck import run_self_check
from .toric import NotStronglyConvex, RedundantRay

INPUT_ERRORS = (
    SchemaError,
    InvalidModel,
    NotStronglyConvex,
    RedundantRay,
    NonzeroRequired,
    NotSimplicial,
    OutOfRange,
    CriterionRangeExceeded,
    ValueError,
    OSError,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dubois",
        description=(
            "Classify the higher Du Bois and higher rational singularity levels "
            "of an affine toric variety or of an affine cone over a catalogued "
            "projective base, in exact arithmetic."
        ),
    )
    parser.add_argument("--input", metavar="PATH", help="variety description (JSON, or TOML by extension)")
    parser.add_argument(
        "--format", choices=("json", "text"), default="json", help="report format (default: json)"
    )
    parser.add_argument("--k-max", type=int, default=None, help="override the level range of the report")
    parser.add_argument("--m-max", type=int, default=None, help="graded-table width (default: 6)")
    parser.add_argument(
        "--self-check",
        action="store_true",
        help="run the built-in invariant suites and exit",
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.self_check:
        return run_self_check()
    if not args.input:
        print("error: --input is required unless --self-check is given", file=sys.stderr)
        return 2
    if args.k_max is not None and args.k_max < 0:
        print("error: --k-max must be nonnegative", file=sys.stderr)
        return 2
    if args.m_max is not None and args.m_max < 1:
        print("error: --m-max must be at least 1", file=sys.stderr)
        return 2
    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
        if args.input.endswith(".toml"):
            spec = parse_spec_toml(text)
        else:
            spec = parse_spec(text)
        doc = run(spec, k_max_override=args.k_max, m_max_override=args.m_max)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rendered = render_text(doc) if args.format == "text" else render_json(doc)
    sys.stdout.write(rendered)
    return exit_code(doc)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
