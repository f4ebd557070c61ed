"""Braid monodromy of plane-curve singularities.

Computes the local braid monodromy of a singular point of a plane
algebraic curve by tracking fiber roots numerically around a loop,
derives relations for the fundamental group of the complement, and
checks the simplified presentations against a catalog of tangented
conic-line configurations, using homomorphism counts into small finite
groups as supporting evidence.
"""

from .catalog import (
    CheckResult,
    Fixture,
    VerificationReport,
    fixture_by_id,
    fixture_from_text,
    fixture_text,
    fixtures,
    n_tangency_fixture,
    verify_fixture,
)
from .curves import CurveSpec, Polynomial2, parse_curve, parse_polynomial
from .errors import (
    BraidMonoError,
    CapacityError,
    CriticalFiberError,
    DegenerateMotionError,
    DimensionMismatchError,
    GeometryError,
    GroupTableError,
    ImproperProjectionError,
    MalformedWordError,
    ParseError,
    TieError,
    TrackingFailureError,
)
from .homcount import (
    FiniteGroupTable,
    HomCountReport,
    alternating_group,
    count_homomorphisms,
    cyclic_group,
    default_targets,
    dihedral_group,
    dump_targets,
    equivalence_evidence,
    load_targets,
    quaternion_group,
    symmetric_group,
)
from .motion import (
    Encircle,
    FrameIn,
    FrameOut,
    Motion,
    MotionProgram,
    RotateBlock,
    compose_motions,
    complex_level_frame,
    encircle_motion,
    motion_to_braid,
    rotate_block_motion,
)
from .presentations import (
    Presentation,
    SimplifyResult,
    Verdict,
    canonical_relator,
    is_consequence,
    kill_generator,
    simplify,
)
from .tracker import (
    LoopSpec,
    fiber_roots,
    lefschetz_braid,
    local_braid_monodromy,
    track_loop,
)
from .vankampen import braid_images, induced_presentation, standard_gbase
from .words import (
    BraidWord,
    FreeWord,
    GBase,
    Permutation,
    artin_action,
    braid_equal,
    braid_permutation,
    exponent_sum,
    free_reduce,
)

__all__ = [
    "BraidMonoError",
    "BraidWord",
    "CapacityError",
    "CheckResult",
    "CriticalFiberError",
    "CurveSpec",
    "DegenerateMotionError",
    "DimensionMismatchError",
    "Encircle",
    "FiniteGroupTable",
    "Fixture",
    "FrameIn",
    "FrameOut",
    "FreeWord",
    "GBase",
    "GeometryError",
    "GroupTableError",
    "HomCountReport",
    "ImproperProjectionError",
    "LoopSpec",
    "MalformedWordError",
    "Motion",
    "MotionProgram",
    "ParseError",
    "Permutation",
    "Polynomial2",
    "Presentation",
    "RotateBlock",
    "SimplifyResult",
    "TieError",
    "TrackingFailureError",
    "Verdict",
    "VerificationReport",
    "alternating_group",
    "artin_action",
    "braid_equal",
    "braid_images",
    "braid_permutation",
    "canonical_relator",
    "complex_level_frame",
    "compose_motions",
    "count_homomorphisms",
    "cyclic_group",
    "default_targets",
    "dihedral_group",
    "dump_targets",
    "encircle_motion",
    "equivalence_evidence",
    "exponent_sum",
    "fiber_roots",
    "fixture_by_id",
    "fixture_from_text",
    "fixture_text",
    "fixtures",
    "free_reduce",
    "induced_presentation",
    "is_consequence",
    "kill_generator",
    "lefschetz_braid",
    "load_targets",
    "local_braid_monodromy",
    "motion_to_braid",
    "n_tangency_fixture",
    "parse_curve",
    "parse_polynomial",
    "quaternion_group",
    "rotate_block_motion",
    "simplify",
    "standard_gbase",
    "symmetric_group",
    "track_loop",
    "verify_fixture",
]

__version__ = "0.1.0"
