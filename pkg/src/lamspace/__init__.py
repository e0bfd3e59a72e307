"""Weighted-mean (lambda) transforms and the series spaces cs_lambda, cs0_lambda, bs_lambda.

The package evaluates infinite sequences lazily, classifies them in classical
sequence spaces and their lambda-domains with three-valued verdicts, builds
the Schauder basis, tests dual membership and certifies matrix classes.
"""

from .basis import BasisVector, Expansion, basis_expansion, basis_vector
from .classes import (
    ATilde,
    ConditionCertificate,
    a_tilde,
    classical_class_check,
    lambda_class_check,
    verify_regularity,
)
from .duals import DualSetId, b_lambda_matrix, delta_bar, dual_membership, t_lambda_matrix
from .errors import (
    GapTooSmall,
    InvalidWeights,
    LamspaceError,
    MissingLambda,
    SubsetDepthTooLarge,
    UnknownWitness,
    UnsupportedPair,
    VacuousPremise,
)
from .matrix import TriangleMatrix
from .sequences import LazySequence, PartialSumSeries
from .spaces import SpaceTag, classify, gallery, inclusion_criterion_check, verify_gallery
from .transform import (
    bs_lambda_norm,
    inverse_lambda_transform,
    lambda_matrix_entry,
    lambda_transform,
    s_operator,
    series_norm,
)
from .verdict import Conclusion, Verdict
from .weights import LambdaWeights, builtin_families

__version__ = "0.1.0"

__all__ = [
    "ATilde", "BasisVector", "Conclusion", "ConditionCertificate", "DualSetId", "Expansion",
    "GapTooSmall", "InvalidWeights", "LambdaWeights", "LamspaceError", "LazySequence",
    "MissingLambda", "PartialSumSeries", "SpaceTag", "SubsetDepthTooLarge", "TriangleMatrix",
    "UnknownWitness", "UnsupportedPair", "VacuousPremise", "Verdict",
    "a_tilde", "b_lambda_matrix", "basis_expansion", "basis_vector", "bs_lambda_norm",
    "builtin_families", "classical_class_check", "classify", "delta_bar", "dual_membership",
    "gallery", "inclusion_criterion_check", "inverse_lambda_transform", "lambda_class_check",
    "lambda_matrix_entry", "lambda_transform", "s_operator", "series_norm", "t_lambda_matrix",
    "verify_gallery", "verify_regularity",
]
