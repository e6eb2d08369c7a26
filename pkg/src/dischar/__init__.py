"""Exact combinatorics of discrete series on the compact Cartan.

Builds root systems from Cartan matrices, grades roots into compact and
noncompact parts, enumerates closed K-orbits, produces the two standard
nilradical-homology tables with their resolution pipelines, expands Weyl
and elliptic character numerators, and evaluates Blattner K-type
multiplicities against an independent filtration oracle.  All arithmetic
is exact.
"""

from .blattner import (
    KTypeTable,
    blattner_multiplicity,
    bwb_cohomology,
    filtration_oracle,
    ktype_table,
    partition,
    partition_p,
)
from .characters import (
    FormalCharacter,
    HomologyTable,
    discrete_numerator,
    euler_character,
    freudenthal_character,
    weyl_denominator,
    weyl_numerator,
)
from .errors import (
    CollapseAmbiguous,
    DimensionMismatch,
    DischarError,
    GroupTooLarge,
    IncompleteAssignment,
    InvariantViolation,
    NotAntidominant,
    NotCompatible,
    NotFiniteType,
    NotIntegral,
    NotStronglyAntidominant,
    ParameterIncompatible,
    TruncationTooSmall,
    ValidationError,
)
from .homology import (
    ResolutionIndex,
    TermGeometry,
    bgg_terms,
    collapse,
    kostant_table,
    kostant_via_bgg,
    schmid_table,
    schmid_via_trauber,
    term_homology_degree,
    trauber_terms,
)
from .orbits import ClosedOrbit, Stratum, enumerate_closed_orbits, orbit_strata
from .realform import CompactGrading, KWeylData, build_grading, validate_grading, weyl_k
from .rootdata import (
    Root,
    RootSystem,
    Weight,
    WeightFlags,
    build_root_system,
    classify_weight,
    coroot_pairing,
    dominant_representative,
)
from .weyl import WeylElement, WeylGroup, act, generate, length_fiber, sign

__version__ = "0.1.0"

__all__ = [
    "KTypeTable",
    "blattner_multiplicity",
    "bwb_cohomology",
    "filtration_oracle",
    "ktype_table",
    "partition",
    "partition_p",
    "FormalCharacter",
    "HomologyTable",
    "discrete_numerator",
    "euler_character",
    "freudenthal_character",
    "weyl_denominator",
    "weyl_numerator",
    "CollapseAmbiguous",
    "DimensionMismatch",
    "DischarError",
    "GroupTooLarge",
    "IncompleteAssignment",
    "InvariantViolation",
    "NotAntidominant",
    "NotCompatible",
    "NotFiniteType",
    "NotIntegral",
    "NotStronglyAntidominant",
    "ParameterIncompatible",
    "TruncationTooSmall",
    "ValidationError",
    "ResolutionIndex",
    "TermGeometry",
    "bgg_terms",
    "collapse",
    "kostant_table",
    "kostant_via_bgg",
    "schmid_table",
    "schmid_via_trauber",
    "term_homology_degree",
    "trauber_terms",
    "ClosedOrbit",
    "Stratum",
    "enumerate_closed_orbits",
    "orbit_strata",
    "CompactGrading",
    "KWeylData",
    "build_grading",
    "validate_grading",
    "weyl_k",
    "Root",
    "RootSystem",
    "Weight",
    "WeightFlags",
    "build_root_system",
    "classify_weight",
    "coroot_pairing",
    "dominant_representative",
    "act",
    "generate",
    "length_fiber",
    "sign",
    "WeylElement",
    "WeylGroup",
]
