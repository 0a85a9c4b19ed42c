"""Symbolic stabilizer reduction for affine schemes with diagonal torus
actions, presented as weight-graded differential algebras."""

from .blowup import (
    Chart,
    LambdaMatrix,
    ReesPresentation,
    ReesRelation,
    ReesVariable,
    blowup_charts,
    chart_truncation_via_lambda,
    crosscheck_truncation,
    dagger_check,
    kirwan_charts,
    lambda_matrix,
    rees_presentation,
)
from .cdga import (
    GradedCdga,
    GradedVariable,
    Generator1,
    Generator2,
    SubtorusBasis,
    TangentRanks,
    ValidationReport,
    Violation,
    classical_truncation,
    fixed_locus,
    from_invariant_function,
    tangent_complex_ranks,
    validate_presentation,
    weight_split,
)
from .errors import (
    DaggerViolation,
    DegreeCapReached,
    DepthExceeded,
    InvalidPresentation,
    NoCenter,
    NoPositiveDimensionalStabilizer,
    NotDivisible,
    NotInIdeal,
    ParseError,
    RankUndetermined,
    SchemaError,
    StabredError,
    StrictDecreaseViolation,
    TooManyVariables,
    UnknownVariable,
)
from .ideal import Ideal, eliminate, exact_divide, ideal_equal, ideal_membership, intersect, saturate
from .parsing import parse_polynomial
from .poly import GREVLEX, LEX, ElimOrder, MonomialOrder, Polynomial, order_from_name
from .reduce import (
    ObstructionReport,
    ReduceConfig,
    ReductionNode,
    iter_leaves,
    obstruction_report,
    quasi_smooth_check,
    stabilizer_reduce,
    tree_depth,
)
from .report import TOOL_VERSION as __version__
from .scene import Scene, SceneOptions, load_scene, load_scene_file, parse_scene, serialize_scene
from .torus import (
    StabilizerReport,
    Stratum,
    saturation_ideal,
    stabilizer_stratification,
    witness_subtori,
    xmax,
)

__all__ = [
    "Chart",
    "DaggerViolation",
    "DegreeCapReached",
    "DepthExceeded",
    "ElimOrder",
    "GREVLEX",
    "GradedCdga",
    "GradedVariable",
    "Generator1",
    "Generator2",
    "Ideal",
    "InvalidPresentation",
    "LEX",
    "LambdaMatrix",
    "MonomialOrder",
    "NoCenter",
    "NoPositiveDimensionalStabilizer",
    "NotDivisible",
    "NotInIdeal",
    "ObstructionReport",
    "ParseError",
    "Polynomial",
    "RankUndetermined",
    "ReduceConfig",
    "ReductionNode",
    "ReesPresentation",
    "ReesRelation",
    "ReesVariable",
    "SceneOptions",
    "Scene",
    "SchemaError",
    "StabilizerReport",
    "StabredError",
    "StrictDecreaseViolation",
    "Stratum",
    "SubtorusBasis",
    "TangentRanks",
    "TooManyVariables",
    "UnknownVariable",
    "ValidationReport",
    "Violation",
    "blowup_charts",
    "chart_truncation_via_lambda",
    "classical_truncation",
    "crosscheck_truncation",
    "dagger_check",
    "eliminate",
    "exact_divide",
    "fixed_locus",
    "from_invariant_function",
    "ideal_equal",
    "ideal_membership",
    "intersect",
    "iter_leaves",
    "kirwan_charts",
    "lambda_matrix",
    "load_scene",
    "load_scene_file",
    "obstruction_report",
    "order_from_name",
    "parse_polynomial",
    "parse_scene",
    "quasi_smooth_check",
    "rees_presentation",
    "saturate",
    "saturation_ideal",
    "serialize_scene",
    "stabilizer_reduce",
    "stabilizer_stratification",
    "tangent_complex_ranks",
    "tree_depth",
    "validate_presentation",
    "weight_split",
    "witness_subtori",
    "xmax",
]
