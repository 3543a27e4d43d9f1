"""Finite paraorthogonal orthogonal polynomials on the unit circle.

Core pipeline: truncated Verblunsky data -> Szego recurrence ->
unimodular spectrum and positive weights -> CMV matrix form.  Mirror
duality and its fixed points (persymmetric systems) get their own
verifiers, and persymmetric systems can be reconstructed from their
spectrum alone.
"""

from .complex_poly import (
    Polynomial,
    UnitCirclePoint,
    derivative_at,
    evaluate,
    from_roots,
    lagrange_interpolate,
    roots,
    star,
)
from .cmv import (
    LaurentEigenvector,
    MirrorRelationReport,
    QuasiReflection,
    characteristic_polynomial,
    cmv_matrix,
    factors,
    laurent_eigenvector,
    persymmetric_sign_pattern,
    quasi_reflection,
    theta_block,
    unitarity_residual,
    verify_mirror_relations,
)
from .errors import (
    ConvergenceError,
    DegenerateNodesError,
    NotPersymmetricError,
    PersymmetryViolationError,
    PopucError,
    ShapeError,
    SpectralValidityError,
    SpectrumInconsistencyError,
    SzegoClassError,
    WeightError,
)
from .families import (
    FamilyInstance,
    free_family,
    krawtchouk_family,
    single_moment,
    single_moment_dual,
    single_moment_persymmetric,
    verify_family,
)
from .inverse_spectral import (
    ReconstructionResult,
    inverse_szego_step,
    reconstruct_persymmetric,
)
from .mirror import (
    PersymmetricSeed,
    PersymmetryCharacterizations,
    dual_weights,
    is_persymmetric,
    make_persymmetric,
    mirror_dual,
    persymmetric_weights,
    persymmetry_defect,
    phi_n_values,
    principal_sqrt_unimodular,
    verify_persymmetry_characterizations,
)
from .opuc_core import (
    OpucSystem,
    SpectralData,
    VerblunskySequence,
    build_system,
    orthogonality_residual,
    paraorthogonality_residual,
    spectrum,
    verblunsky_from_polys,
    weights,
)
from .tolerances import DEFAULT, Tolerances

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DEFAULT",
    "DegenerateNodesError",
    "FamilyInstance",
    "LaurentEigenvector",
    "MirrorRelationReport",
    "NotPersymmetricError",
    "OpucSystem",
    "PersymmetricSeed",
    "PersymmetryCharacterizations",
    "PersymmetryViolationError",
    "Polynomial",
    "PopucError",
    "QuasiReflection",
    "ReconstructionResult",
    "ShapeError",
    "SpectralData",
    "SpectralValidityError",
    "SpectrumInconsistencyError",
    "SzegoClassError",
    "Tolerances",
    "UnitCirclePoint",
    "VerblunskySequence",
    "WeightError",
    "build_system",
    "characteristic_polynomial",
    "cmv_matrix",
    "derivative_at",
    "dual_weights",
    "evaluate",
    "factors",
    "free_family",
    "from_roots",
    "inverse_szego_step",
    "is_persymmetric",
    "krawtchouk_family",
    "lagrange_interpolate",
    "laurent_eigenvector",
    "make_persymmetric",
    "mirror_dual",
    "orthogonality_residual",
    "paraorthogonality_residual",
    "persymmetric_sign_pattern",
    "persymmetric_weights",
    "persymmetry_defect",
    "phi_n_values",
    "principal_sqrt_unimodular",
    "quasi_reflection",
    "reconstruct_persymmetric",
    "roots",
    "single_moment",
    "single_moment_dual",
    "single_moment_persymmetric",
    "spectrum",
    "star",
    "theta_block",
    "unitarity_residual",
    "verblunsky_from_polys",
    "verify_family",
    "verify_mirror_relations",
    "verify_persymmetry_characterizations",
    "weights",
]
