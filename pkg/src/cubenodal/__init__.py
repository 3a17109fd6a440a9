"""Nodal-domain census for Dirichlet eigenfunctions of the cube (0, pi)^3.

The pipeline enumerates the box spectrum, screens Courant-sharp candidates
with a Faber-Krahn threshold and a lattice-count cutoff, halves the Courant
bound on parity subspaces of the antipodal map, analyzes the eigenvalue-11
eigenspace through its reduced quadric, and counts nodal domains of arbitrary
eigenspace combinations on refining grids.
"""

__version__ = "0.1.0"

from .spectrum import (
    CUBE,
    BoxSpec,
    EigenvalueGroup,
    ModeTriple,
    counting_function,
    enumerate_groups,
    product_nodal_count,
)
from .bounds import (
    FABER_KRAHN_RATIO,
    ScreeningRecord,
    faber_krahn_threshold,
    lattice_lower_bound,
    pleijel_asymptotic_ratio,
    pleijel_cutoff,
    screen_candidates,
)
from .symmetry import (
    Parity,
    SymmetricIndex,
    eigenspace_parity,
    group_parity,
    symmetric_index,
    symmetry_excludes,
)
from .quadric import (
    ComponentPrediction,
    QuadricClass,
    QuadricCoeffs,
    boundary_distance,
    classify,
    predict_components,
    reduce_to_quadric,
)
from .nodal import (
    RESOLUTION_CAP,
    EigenCombo,
    NodalCount,
    ScalarGrid,
    SweepResult,
    SweepSample,
    count_components,
    count_nodal_domains,
    sample_field,
    sphere_samples,
    sweep_eigenspace,
)

__all__ = [
    "__version__",
    "CUBE",
    "BoxSpec",
    "EigenvalueGroup",
    "ModeTriple",
    "counting_function",
    "enumerate_groups",
    "product_nodal_count",
    "FABER_KRAHN_RATIO",
    "ScreeningRecord",
    "faber_krahn_threshold",
    "lattice_lower_bound",
    "pleijel_asymptotic_ratio",
    "pleijel_cutoff",
    "screen_candidates",
    "Parity",
    "SymmetricIndex",
    "eigenspace_parity",
    "group_parity",
    "symmetric_index",
    "symmetry_excludes",
    "ComponentPrediction",
    "QuadricClass",
    "QuadricCoeffs",
    "boundary_distance",
    "classify",
    "predict_components",
    "reduce_to_quadric",
    "RESOLUTION_CAP",
    "EigenCombo",
    "NodalCount",
    "ScalarGrid",
    "SweepResult",
    "SweepSample",
    "count_components",
    "count_nodal_domains",
    "sample_field",
    "sphere_samples",
    "sweep_eigenspace",
]
