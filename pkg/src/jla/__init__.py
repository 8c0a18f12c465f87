"""Exact-arithmetic structure theory for split delta Jordan-Lie algebras.

The library represents a finite-dimensional algebra by its structure
constants over the rationals, verifies the delta-twisted bracket axioms,
computes root decompositions relative to a candidate splitting Cartan
subspace, partitions the roots into connection classes, decomposes the
algebra into the ideals those classes generate, and decides simplicity
under five checkable hypotheses, cross-checking every conclusion against
a brute-force ideal enumeration.
"""

from .algebra import (
    AxiomReport,
    OracleCapExceeded,
    StructureTable,
    ad_matrix,
    bracket,
    center,
    check_axioms,
    derived,
    ideal_closure,
    is_ideal,
    minimal_ideals_oracle,
)
from .algfile import AlgebraFileError, dump, dumps, load, loads
from .connections import (
    ConnectionClass,
    DecompositionReport,
    IdealComponent,
    ProportionalRootsError,
    connected_set,
    connection_classes,
    decompose,
    extract_root_components,
    ideal_component,
    is_root_subsystem,
    separating_element,
    subsystem_subalgebra,
)
from .errors import PreconditionError, VerificationError
from .linalg import (
    Matrix,
    NotSplitError,
    Subspace,
    complement_within,
    kernel,
    rational_eigen,
    rref,
    span_intersection,
    span_sum,
)
from .roots import (
    CartanCandidate,
    CartanReport,
    GradingReport,
    RootDecomposition,
    centralizer,
    is_symmetric,
    root_decomposition,
    verify_bracket_grading,
    verify_splitting_cartan,
)
from .simplicity import (
    SimplicityVerdict,
    StructureReport,
    is_root_multiplicative,
    no_ideal_in_cartan_check,
    simplicity_criterion,
    structure_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraFileError",
    "AxiomReport",
    "CartanCandidate",
    "CartanReport",
    "ConnectionClass",
    "DecompositionReport",
    "GradingReport",
    "IdealComponent",
    "Matrix",
    "NotSplitError",
    "OracleCapExceeded",
    "PreconditionError",
    "ProportionalRootsError",
    "RootDecomposition",
    "SimplicityVerdict",
    "StructureReport",
    "StructureTable",
    "Subspace",
    "VerificationError",
    "ad_matrix",
    "bracket",
    "center",
    "centralizer",
    "check_axioms",
    "complement_within",
    "connected_set",
    "connection_classes",
    "decompose",
    "derived",
    "dump",
    "dumps",
    "extract_root_components",
    "ideal_closure",
    "ideal_component",
    "is_ideal",
    "is_root_multiplicative",
    "is_root_subsystem",
    "is_symmetric",
    "kernel",
    "load",
    "loads",
    "minimal_ideals_oracle",
    "no_ideal_in_cartan_check",
    "rational_eigen",
    "root_decomposition",
    "rref",
    "separating_element",
    "simplicity_criterion",
    "span_intersection",
    "span_sum",
    "structure_theorem",
    "subsystem_subalgebra",
    "verify_bracket_grading",
    "verify_splitting_cartan",
]
