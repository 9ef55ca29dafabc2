"""Finite effect-algebra topologies and Hilbert-space convergence checks.

The package has two halves that meet in :mod:`effecttopo.relations`:

* finite, exact machinery — partial-sum tables, axiom validation, the
  derived order, and the order/interval closed-set families
  (:mod:`effecttopo.algebra`, :mod:`effecttopo.topology`,
  :mod:`effecttopo.eaformat`);
* numerical machinery for effects on a separable Hilbert space —
  PSD/projection predicates, counterexample operator families, and the
  monotone/squeeze convergence batteries (:mod:`effecttopo.matrices`,
  :mod:`effecttopo.families`).

Hot numerical kernels run on a compiled extension when available;
``KERNEL_BACKEND`` says which implementation was picked at import time.
"""

from . import kernels
from .algebra import (
    DEFAULT_CARRIER_CAP,
    DerivedOrder,
    EffectAlgebra,
    ValidationReport,
    Violation,
    boolean_algebra,
    chain,
    derive_order,
    diamond,
    hasse_diagram,
    horizontal_sum,
    is_sharp,
    standard_corpus,
    validate_axioms,
)
from .eaformat import (
    Diagnostic,
    EaDocument,
    ParseOutcome,
    SumClause,
    format_algebra,
    format_document,
    lower,
    parse_ea,
)
from .errors import (
    CarrierCapError,
    ConvergenceError,
    DimensionMismatchError,
    EffectTopoError,
    InvalidAlgebraError,
    LoweringError,
    MalformedTableError,
    MissingCheckError,
    NonHermitianError,
    NotPsdError,
    NumericsError,
    ScenarioFormatError,
)
from .families import (
    ConvergenceReport,
    OperatorFamily,
    SparseVector,
    SqueezeFamily,
    StageResult,
    builtin_scenarios,
    family,
    interval_floor_obstruction,
    load_scenario,
    norm_distance,
    sot_residual,
    squeeze_sot_check,
    upper_bound_obstruction,
    vigier_check,
    wot_residual,
)
from .matrices import (
    DEFAULT_TOL,
    Tolerances,
    is_effect,
    is_hermitian,
    is_projection,
    is_psd,
    loewner_leq,
    oplus,
    orthosupplement,
    sharp_witness,
    wot_sot_identity_residual,
)
from .relations import (
    CheckResult,
    RelationEdge,
    RelationReport,
    TopologyId,
    build_relation_report,
    collect_evidence,
    render,
)
from .topology import (
    ClosedSetFamily,
    LassoSequence,
    compare_topologies,
    interval_topology,
    order_converges,
    order_topology,
)

KERNEL_BACKEND = kernels.BACKEND

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    # algebra
    "DEFAULT_CARRIER_CAP",
    "DerivedOrder",
    "EffectAlgebra",
    "ValidationReport",
    "Violation",
    "boolean_algebra",
    "chain",
    "derive_order",
    "diamond",
    "hasse_diagram",
    "horizontal_sum",
    "is_sharp",
    "standard_corpus",
    "validate_axioms",
    # text format
    "Diagnostic",
    "EaDocument",
    "ParseOutcome",
    "SumClause",
    "format_algebra",
    "format_document",
    "lower",
    "parse_ea",
    # errors
    "CarrierCapError",
    "ConvergenceError",
    "DimensionMismatchError",
    "EffectTopoError",
    "InvalidAlgebraError",
    "LoweringError",
    "MalformedTableError",
    "MissingCheckError",
    "NonHermitianError",
    "NotPsdError",
    "NumericsError",
    "ScenarioFormatError",
    # operator families
    "ConvergenceReport",
    "OperatorFamily",
    "SparseVector",
    "SqueezeFamily",
    "StageResult",
    "builtin_scenarios",
    "family",
    "interval_floor_obstruction",
    "load_scenario",
    "norm_distance",
    "sot_residual",
    "squeeze_sot_check",
    "upper_bound_obstruction",
    "vigier_check",
    "wot_residual",
    # matrices
    "DEFAULT_TOL",
    "Tolerances",
    "is_effect",
    "is_hermitian",
    "is_projection",
    "is_psd",
    "loewner_leq",
    "oplus",
    "orthosupplement",
    "sharp_witness",
    "wot_sot_identity_residual",
    # relations
    "CheckResult",
    "RelationEdge",
    "RelationReport",
    "TopologyId",
    "build_relation_report",
    "collect_evidence",
    "render",
    # topologies
    "ClosedSetFamily",
    "LassoSequence",
    "compare_topologies",
    "interval_topology",
    "order_converges",
    "order_topology",
]
