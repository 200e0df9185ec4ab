"""Concurrence classes and the minimal entanglement generating set.

The package builds the EPR and GHZ families of class operators from
phase-complement blocks, evaluates the corresponding concurrence classes of
pure multipartite states, and enumerates the full generating set for ``m``
parties.  A scikit-learn compatible transformer
(:class:`~megs.estimator.ConcurrenceFeatures`) exposes the per-class values
as features; the ``megs`` CLI covers state files, catalog listings, reports
and operator dumps.
"""

from ._validation import NORM_ATOL
from .catalog import DEFAULT_CATALOG_CAP, MegsCatalog, enumerate_megs, megs_counts
from .concurrence import (
    ConcurrenceReport,
    class_concurrence,
    class_operator_values,
    full_report,
    w_class_concurrence,
)
from .core import (
    DEFAULT_DENSE_CAP,
    DENSE_CAP_ENV,
    MultiState,
    bilinear_expectation,
    conjugate_state,
    dense_cap,
    flat_index,
    kron,
    kron_all,
    multi_index,
)
from .estimator import ConcurrenceFeatures
from .exceptions import CapacityError
from .operators import (
    ClassKind,
    ClassLabel,
    ClassOperator,
    elementary_block,
    enumerate_class_operators,
    epr_operator,
    ghz_operator,
    index_pairs,
    split_anti_diagonal,
    split_sign_components,
)
from .povm import (
    ANTISYMMETRY_ATOL,
    PhaseKind,
    PhaseSpec,
    build_povm,
    canonical_phases,
    complement,
    multipartite_complement,
)
from .states import (
    StateFile,
    basis_state,
    bell_state,
    ghz_state,
    parse_state_document,
    product_state,
    random_state,
    read_state_file,
    serialize_state,
    w_state,
    write_state_file,
)

__version__ = "0.1.0"

__all__ = [
    "ANTISYMMETRY_ATOL",
    "CapacityError",
    "ClassKind",
    "ClassLabel",
    "ClassOperator",
    "ConcurrenceFeatures",
    "ConcurrenceReport",
    "DEFAULT_CATALOG_CAP",
    "DEFAULT_DENSE_CAP",
    "DENSE_CAP_ENV",
    "MegsCatalog",
    "MultiState",
    "NORM_ATOL",
    "PhaseKind",
    "PhaseSpec",
    "StateFile",
    "basis_state",
    "bell_state",
    "bilinear_expectation",
    "build_povm",
    "canonical_phases",
    "class_concurrence",
    "class_operator_values",
    "complement",
    "conjugate_state",
    "dense_cap",
    "elementary_block",
    "enumerate_class_operators",
    "enumerate_megs",
    "epr_operator",
    "flat_index",
    "full_report",
    "ghz_operator",
    "ghz_state",
    "index_pairs",
    "kron",
    "kron_all",
    "megs_counts",
    "multi_index",
    "multipartite_complement",
    "parse_state_document",
    "product_state",
    "random_state",
    "read_state_file",
    "serialize_state",
    "split_anti_diagonal",
    "split_sign_components",
    "w_class_concurrence",
    "w_state",
    "write_state_file",
]
