"""Specialization index and related invariants of degenerating curves.

The input is the combinatorial data ``(N, G, C)`` of the special fiber of an
snc-model: component multiplicities, component genera and the intersection
matrix.  From it the package computes the index, the nu-invariant, the
specialization index and the degree set, transforms the data by blow-ups,
and searches bounded families of realizable types.
"""
from .canonical import canonical
from .catalog import example1, example2, seed_types
from .core import (
    AbstractSncFiber,
    IntegerRangeError,
    MalformedTypeError,
    ReductionType,
    Stratum,
    ValidationReport,
    strata_of,
    to_abstract,
    validate_model,
)
from .fileformat import FormatError, export_dot
from .invariants import (
    DegreeSet,
    InvariantSummary,
    bound_check,
    degree_set,
    degree_set_contains,
    genus,
    index,
    nu,
    sp_index,
    sp_index_abstract,
    summarize,
)
from .modelops import (
    BlowupChain,
    BlowupStep,
    NotRealizableError,
    blowup_intersection,
    blowup_smooth_point,
    random_refinement,
    realize_degree,
)
from .search import SearchConstraints, SearchResult, enumerate_types, strict_family, verify_example
from .semigroup import (
    BudgetExceeded,
    GcdCertificate,
    ShiftedSemigroup,
    check_stability,
    min_gcd_of_union,
    sg_contains,
    sg_gcd,
    stability_threshold,
)

__version__ = "0.1.0"
