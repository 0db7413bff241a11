"""Exact-arithmetic toolkit for root-system combinatorics: distinguished
orbit data, q-distinguished torus elements, pole-order ledgers and
discrete-parameter bookkeeping."""

from .errors import (
    BoundViolated,
    IllegalDifference,
    InvalidSetting,
    InvalidType,
    MalformedSkeleton,
    NonDominantUnresolvable,
    NonTrivialCompactPart,
    NotAnAutomorphism,
    NotHyperbolicCenter,
    NotQDistinguished,
    QOrbitsError,
    RankBoundExceeded,
    SingularSystem,
    UnknownLine,
    UnrecognizedDiagram,
)
from .rootsys import (
    CartanType,
    DiagramAutomorphism,
    RootSystem,
    Subsystem,
    build_root_system,
    closed_subsystem,
    dual_system,
    fixed_corank,
    full_subsystem,
    irreducible_components,
    root_system_from_cartan,
    subsystem_with_base,
    weyl_dominantize,
)
from .torus import (
    ONE,
    Q_VALUE,
    RootValue,
    TorusElement,
    centralizer_subsystem,
    compact_order,
    eigenspace_dim,
    identity_element,
    is_q_distinguished,
    multiply,
    polar_parts,
    restrict_to_subsystem,
    torus_element,
    value_on_root,
)
from .orbits import (
    OrbitLabel,
    ParabolicDatum,
    WeightedCoweight,
    bala_carter,
    coweight_from_datum,
    enumerate_distinguished,
    graded_dims,
    is_distinguished,
    is_distinguished_coweight,
    torus_from_coweight,
    weight_of_root,
)
from .l2pair import (
    L2Pair,
    SL2Flags,
    VerifyResult,
    construct_l2_pair,
    discrete_sl2_parameter,
    verify_l2_pair,
)
from .mupole import (
    INTERNAL,
    LineClass,
    MuSetting,
    PoleLedger,
    SquareIntegrabilityReport,
    TypeMatchVerdict,
    center_rank_check,
    classify_line,
    derive_line_map,
    line_dims,
    make_mu_setting,
    square_integrable,
    total_order,
    type_match,
)
from .lparam import (
    DiscretenessReport,
    LanglandsTriple,
    ParameterSkeleton,
    frobenius_split,
    is_discrete,
    langlands_assemble,
    langlands_decompose,
    tori_correspond,
)

__version__ = "0.1.0"
