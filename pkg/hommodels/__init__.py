"""Small models of graph-colouring manifolds. Re-exports the public API."""
from .complex import (
    SimplicialComplex,
    barycentric,
    boundary_of_simplex,
    f_vector,
    face_poset,
    join,
    link,
    simplex,
    simplicial_neighborhood,
    sphere_verdict,
)
from .config import DEFAULT_BUDGETS, Budgets
from .errors import (
    BudgetExceeded,
    ComplexError,
    DomainError,
    FormatError,
    GraphError,
    HomComplexError,
    HomModelsError,
    PosetError,
)
from .graph import Graph, GraphHom, build_named, common_neighbors, independence_complex, independent_sets
from .homcomplex import (
    c5_flip_involution,
    families_A_B_C,
    hom_poset,
    induced_map,
    multihoms,
    restricted_hom_poset,
)
from .homology import boundary_matrices, homology_summary, smith_normal_form
from .models import HomologySummary, MultiHom, SphereVerdict, TripleElement, VerificationReport, VertexSet
from .neighborhoods import build_D, build_NB
from .poset import (
    Poset,
    PosetMap,
    chain32_poset,
    find_isomorphism,
    interval_poset,
    iterated_interval_poset,
    opposite,
    order_complex,
    product,
)
from .verify import (
    verify_dual_decomposition,
    verify_full_vs_small_homology,
    verify_involution_equivariance,
    verify_manifold_criterion,
    verify_small_model_homology,
    verify_stiefel_iso,
    verify_subdivision_suite,
)

__all__ = [
    "BudgetExceeded",
    "Budgets",
    "ComplexError",
    "DEFAULT_BUDGETS",
    "DomainError",
    "FormatError",
    "Graph",
    "GraphError",
    "GraphHom",
    "HomComplexError",
    "HomModelsError",
    "HomologySummary",
    "MultiHom",
    "Poset",
    "PosetError",
    "PosetMap",
    "SimplicialComplex",
    "SphereVerdict",
    "TripleElement",
    "VerificationReport",
    "VertexSet",
    "barycentric",
    "boundary_matrices",
    "boundary_of_simplex",
    "build_D",
    "build_NB",
    "build_named",
    "c5_flip_involution",
    "chain32_poset",
    "common_neighbors",
    "f_vector",
    "face_poset",
    "families_A_B_C",
    "find_isomorphism",
    "hom_poset",
    "homology_summary",
    "independence_complex",
    "independent_sets",
    "induced_map",
    "interval_poset",
    "iterated_interval_poset",
    "join",
    "link",
    "multihoms",
    "opposite",
    "order_complex",
    "product",
    "restricted_hom_poset",
    "simplex",
    "simplicial_neighborhood",
    "smith_normal_form",
    "sphere_verdict",
    "verify_dual_decomposition",
    "verify_full_vs_small_homology",
    "verify_involution_equivariance",
    "verify_manifold_criterion",
    "verify_small_model_homology",
    "verify_stiefel_iso",
    "verify_subdivision_suite",
]
__version__ = "0.1.0"
