"""BWT variants for string collections: construction, inversion, and
comparison of the omega-order transform and its four separator-based
relatives, plus the run, interval, permutation, and distance analytics
that explain how they differ."""

from .collection import (
    Collection,
    SeqRecord,
    from_seqs,
    parse_fasta,
    parse_lines,
    serialize_fasta,
    serialize_lines,
    validate,
)
from .distances import DistanceMatrix, distance_matrix, edit_distance, hamming
from .errors import (
    BwtError,
    GuardError,
    ParseError,
    TransformError,
    ValidationError,
)
from .intervals import (
    InterestingInterval,
    IntervalReport,
    hamming_upper_bound,
    interesting_intervals,
    max_runs_bound,
    variability,
)
from .kernels import BACKEND
from .oracle import (
    RotationMatrix,
    brute_force_interval_max_runs,
    brute_force_optimal_runs,
    format_rotation_matrix,
    naive_rotation_sort,
)
from .ordering import (
    EQUAL,
    GREATER,
    LESS,
    SEP,
    TERM,
    RootDecomposition,
    RotationRef,
    Sentinel,
    colex_compare,
    colex_order,
    lex_compare,
    lex_order,
    omega_compare,
    primitive_root,
    sentinel_compare,
    sep,
)
from .permutations import (
    Perm,
    PermutationProfile,
    enumerate_feasible,
    gamma,
    input_rank_permutation,
    is_feasible,
    linking_permutation,
    pi_conc,
    profile,
)
from .report import AnalyzeReport, analyze
from .runs import (
    OptimalOrderResult,
    RunStats,
    colex_gap,
    count_runs,
    optimal_order,
    rle_decode,
    rle_encode,
    rle_text,
)
from .synth import GenSpec, generate
from .transforms import (
    Transform,
    Variant,
    build,
    colex_bwt,
    conc_bwt,
    dol_ebwt,
    ebwt,
    from_text,
    invert_ebwt,
    invert_separator_based,
    least_rotation,
    mdol_bwt,
    normalize_conc,
    single_bwt,
    to_text,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyzeReport",
    "BACKEND",
    "BwtError",
    "Collection",
    "DistanceMatrix",
    "EQUAL",
    "GREATER",
    "GenSpec",
    "GuardError",
    "InterestingInterval",
    "IntervalReport",
    "LESS",
    "OptimalOrderResult",
    "ParseError",
    "Perm",
    "PermutationProfile",
    "RootDecomposition",
    "RotationMatrix",
    "RotationRef",
    "RunStats",
    "SEP",
    "Sentinel",
    "SeqRecord",
    "TERM",
    "Transform",
    "TransformError",
    "ValidationError",
    "Variant",
    "analyze",
    "brute_force_interval_max_runs",
    "brute_force_optimal_runs",
    "build",
    "colex_bwt",
    "colex_compare",
    "colex_gap",
    "colex_order",
    "conc_bwt",
    "count_runs",
    "distance_matrix",
    "dol_ebwt",
    "ebwt",
    "edit_distance",
    "enumerate_feasible",
    "format_rotation_matrix",
    "from_seqs",
    "from_text",
    "gamma",
    "generate",
    "hamming",
    "hamming_upper_bound",
    "input_rank_permutation",
    "interesting_intervals",
    "invert_ebwt",
    "invert_separator_based",
    "is_feasible",
    "least_rotation",
    "lex_compare",
    "lex_order",
    "linking_permutation",
    "max_runs_bound",
    "mdol_bwt",
    "naive_rotation_sort",
    "normalize_conc",
    "omega_compare",
    "optimal_order",
    "parse_fasta",
    "parse_lines",
    "pi_conc",
    "primitive_root",
    "profile",
    "rle_decode",
    "rle_encode",
    "rle_text",
    "sentinel_compare",
    "sep",
    "serialize_fasta",
    "serialize_lines",
    "single_bwt",
    "to_text",
    "validate",
    "variability",
]
