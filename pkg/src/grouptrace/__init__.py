"""Harmonic analysis on finite groups with cross-verified trace identities."""

from .algebra import (
    GroupFunction,
    class_sum,
    class_sums,
    constant_function,
    convolve,
    delta,
    fourier_trace,
    fourier_trace_pair,
    function_from_values,
    random_function,
)
from .catalog import CatalogEntry, build_named, catalog_entries, catalog_names
from .characters import (
    CharacterTable,
    Irrep,
    OrthogonalityReport,
    character_value,
    compute_character_table,
    structure_constants,
    verify_orthogonality,
)
from .cosets import CosetSpace, build_coset_space, fixed_point_count, fixed_point_vector
from .errors import (
    ClosureCapExceeded,
    DegenerateSpectrum,
    EngineError,
    GroupMismatch,
    IndexOutOfRange,
    InputError,
    NoIdentity,
    NoInverse,
    NonIntegralMultiplicity,
    NotAPermutation,
    NotAssociative,
    NotLatinSquare,
    OracleTooLarge,
    OrthogonalityFailure,
    SubgroupMismatch,
    VerificationError,
)
from .groups import (
    ClassData,
    FiniteGroup,
    Subgroup,
    build_from_cayley,
    build_from_permutations,
    conjugacy_classes,
    cycle_notation,
    full_subgroup,
    subgroup_closure,
    trivial_subgroup,
)
from .traces import (
    CheckResult,
    MultiplicitySpectrum,
    TraceComparison,
    TraceContext,
    VerificationReport,
    char_regular,
    class_spectral_check,
    compare_traces,
    counting_identity_check,
    make_context,
    multiplicity,
    multiplicity_spectrum,
    multiplicity_square_check,
    plancherel_check,
    trace_direct,
    trace_geometric,
    trace_pointcount,
    trace_spectral,
    verify_all,
)

__all__ = [
    "CatalogEntry",
    "CharacterTable",
    "CheckResult",
    "ClassData",
    "ClosureCapExceeded",
    "CosetSpace",
    "DegenerateSpectrum",
    "EngineError",
    "FiniteGroup",
    "GroupFunction",
    "GroupMismatch",
    "IndexOutOfRange",
    "InputError",
    "Irrep",
    "MultiplicitySpectrum",
    "NoIdentity",
    "NoInverse",
    "NonIntegralMultiplicity",
    "NotAPermutation",
    "NotAssociative",
    "NotLatinSquare",
    "OracleTooLarge",
    "OrthogonalityFailure",
    "OrthogonalityReport",
    "Subgroup",
    "SubgroupMismatch",
    "TraceComparison",
    "TraceContext",
    "VerificationError",
    "VerificationReport",
    "build_coset_space",
    "build_from_cayley",
    "build_from_permutations",
    "build_named",
    "catalog_entries",
    "catalog_names",
    "char_regular",
    "character_value",
    "class_spectral_check",
    "class_sum",
    "class_sums",
    "compare_traces",
    "compute_character_table",
    "conjugacy_classes",
    "constant_function",
    "convolve",
    "counting_identity_check",
    "cycle_notation",
    "delta",
    "fixed_point_count",
    "fixed_point_vector",
    "fourier_trace",
    "fourier_trace_pair",
    "full_subgroup",
    "function_from_values",
    "make_context",
    "multiplicity",
    "multiplicity_spectrum",
    "multiplicity_square_check",
    "plancherel_check",
    "random_function",
    "structure_constants",
    "subgroup_closure",
    "trace_direct",
    "trace_geometric",
    "trace_pointcount",
    "trace_spectral",
    "trivial_subgroup",
    "verify_all",
    "verify_orthogonality",
]
