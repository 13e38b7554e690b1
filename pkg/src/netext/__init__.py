"""Combinatorial calculus for surface decompositions of spatial graphs.

Exact half-integer extent arithmetic, compressionbody combinatorics with an
exhaustive classification oracle, oriented decompositions with net-extent
and surgery arithmetic, and tunnel/bridge lower bounds with an equality
ledger over prime factorizations.
"""

from .halfint import HALF, HalfInt, ONE, ZERO, hsum
from .surfaces import (
    Role,
    SurfaceComponent,
    SurfaceSet,
    euler_char,
    extent,
    extent_set,
    sphere,
    torus,
    vertex_sphere,
)
from .bodies import (
    CanonicalKey,
    GhostArcGraph,
    InadmissibleBodyError,
    ValidationReport,
    Violation,
    VPClass,
    VpBody,
    admissible,
    canonical_form,
    classify_delta_zero,
    delta,
    validate,
)
from .enumeration import (
    EnumSpec,
    EnumerationResult,
    enumerate_bodies,
    enumerate_delta_zero,
    is_saturated,
)
from .tables import ClassificationTable, DiffReport, compare, load_table
from .decomposition import (
    Ambient,
    Decomposition,
    GraphKind,
    InvalidDecompositionError,
    SurgeryReport,
    ThickGluing,
    ThinGluing,
    capital_delta,
    check_delta_identity,
    link_parity,
    netchi,
    netext,
    reverse_orientations,
    surger,
    topological_order,
    validate_decomposition,
)
from .factors import (
    Factor,
    FactorKind,
    Factorization,
    curve_0_2,
    curve_1_1,
    curve_2_0,
    generic_graph,
    generic_knot,
    hopf_graph,
    hopf_slinky,
    lens_core,
    propeller_knot,
    trivial_theta,
    trivial_two_bouquet,
)
from .bounds import (
    BoundResult,
    BoundsError,
    BridgeBound,
    BrunnianBound,
    DistributionReport,
    LedgerReport,
    NetextClassification,
    bridge_lower,
    brunnian_lower,
    classify_by_netext,
    distribution_check,
    equality_ledger,
    morimoto_lower,
    netext_lower,
    tunnel_lower,
    tunnel_lower_int,
)
from .searches import (
    catalog_kinds,
    distribution_counterexamples,
    iter_feasible_multisets,
    tunnel_tight_theta_multisets,
)
from . import standard
from .examples import example_names, example_path

__version__ = "0.1.0"

__all__ = [
    "HALF",
    "HalfInt",
    "ONE",
    "ZERO",
    "hsum",
    "Role",
    "SurfaceComponent",
    "SurfaceSet",
    "euler_char",
    "extent",
    "extent_set",
    "sphere",
    "torus",
    "vertex_sphere",
    "CanonicalKey",
    "GhostArcGraph",
    "InadmissibleBodyError",
    "ValidationReport",
    "Violation",
    "VPClass",
    "VpBody",
    "admissible",
    "canonical_form",
    "classify_delta_zero",
    "delta",
    "validate",
    "EnumSpec",
    "EnumerationResult",
    "enumerate_bodies",
    "enumerate_delta_zero",
    "is_saturated",
    "ClassificationTable",
    "DiffReport",
    "compare",
    "load_table",
    "Ambient",
    "Decomposition",
    "GraphKind",
    "InvalidDecompositionError",
    "SurgeryReport",
    "ThickGluing",
    "ThinGluing",
    "capital_delta",
    "check_delta_identity",
    "link_parity",
    "netchi",
    "netext",
    "reverse_orientations",
    "surger",
    "topological_order",
    "validate_decomposition",
    "Factor",
    "FactorKind",
    "Factorization",
    "curve_0_2",
    "curve_1_1",
    "curve_2_0",
    "generic_graph",
    "generic_knot",
    "hopf_graph",
    "hopf_slinky",
    "lens_core",
    "propeller_knot",
    "trivial_theta",
    "trivial_two_bouquet",
    "BoundResult",
    "BoundsError",
    "BridgeBound",
    "BrunnianBound",
    "DistributionReport",
    "LedgerReport",
    "NetextClassification",
    "bridge_lower",
    "brunnian_lower",
    "classify_by_netext",
    "distribution_check",
    "equality_ledger",
    "morimoto_lower",
    "netext_lower",
    "tunnel_lower",
    "tunnel_lower_int",
    "catalog_kinds",
    "distribution_counterexamples",
    "iter_feasible_multisets",
    "tunnel_tight_theta_multisets",
    "standard",
    "example_names",
    "example_path",
]
