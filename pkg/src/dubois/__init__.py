"""Exact-arithmetic classifier for higher Du Bois and higher rational
singularity levels of affine toric varieties and of affine cones over
catalogued smooth projective bases."""

from ._version import __version__
from .cohomology import (
    CohomologyModel,
    DimValue,
    HodgeDiamond,
    InexactHilbert,
    InvalidModel,
    bott,
    euler_char_omega,
    hilbert_function,
    hodge_diamond,
    hypersurface_surface_model,
    veronese_model,
)
from .cones import (
    NO,
    NOTIONS,
    UNKNOWN,
    YES,
    ConeSpec,
    CriterionRangeExceeded,
    GradedTable,
    OutOfRange,
    SingularityReport,
    Verdict,
    du_bois_graded_table,
    full_report,
    h0_reflexive,
    k_du_bois,
    k_rational,
    pre_k_du_bois,
    pre_k_rational,
)
from .intlinalg import (
    IntegerMatrix,
    NonzeroRequired,
    NotSimplicial,
    SmithDecomposition,
    invariant_factors,
    is_smooth_simplicial_cone,
    lattice_rank,
    primitive_vector,
    smith_normal_form,
)
from .report import (
    SchemaError,
    VarietySpecFile,
    parse_spec,
    parse_spec_toml,
    run,
    spec_from_mapping,
    spec_to_mapping,
)
from .toric import (
    Face,
    NotStronglyConvex,
    PolyCone,
    RedundantRay,
    ToricVerdict,
    classify_toric,
    faces,
    singular_locus_codim,
    toric_verdict_rows,
    validate_cone,
)

__all__ = [
    "__version__",
    "CohomologyModel",
    "DimValue",
    "HodgeDiamond",
    "InexactHilbert",
    "InvalidModel",
    "bott",
    "euler_char_omega",
    "hilbert_function",
    "hodge_diamond",
    "hypersurface_surface_model",
    "veronese_model",
    "NO",
    "NOTIONS",
    "UNKNOWN",
    "YES",
    "ConeSpec",
    "CriterionRangeExceeded",
    "GradedTable",
    "OutOfRange",
    "SingularityReport",
    "Verdict",
    "du_bois_graded_table",
    "full_report",
    "h0_reflexive",
    "k_du_bois",
    "k_rational",
    "pre_k_du_bois",
    "pre_k_rational",
    "IntegerMatrix",
    "NonzeroRequired",
    "NotSimplicial",
    "SmithDecomposition",
    "invariant_factors",
    "is_smooth_simplicial_cone",
    "lattice_rank",
    "primitive_vector",
    "smith_normal_form",
    "SchemaError",
    "VarietySpecFile",
    "parse_spec",
    "parse_spec_toml",
    "run",
    "spec_from_mapping",
    "spec_to_mapping",
    "Face",
    "NotStronglyConvex",
    "PolyCone",
    "RedundantRay",
    "ToricVerdict",
    "classify_toric",
    "faces",
    "singular_locus_codim",
    "toric_verdict_rows",
    "validate_cone",
]
