from tenj.simplicial.complex import (
    SimplicialComplex,
    build_complex,
    is_isomorphic,
    link,
    validate_singular_4manifold,
)
from tenj.simplicial.moves import (
    BistellarMove,
    apply_bistellar,
    candidate_sites,
    random_move_walk,
)
from tenj.simplicial.orientation import (
    OrderedOrientedComplex,
    disjoint_union,
    face,
    orient,
    orient_complex,
    relative_sign,
    reorder,
    reverse_orientation,
)
from tenj.simplicial.products import boundary_simplex, circle, staircase_product

__all__ = [
    "BistellarMove",
    "OrderedOrientedComplex",
    "SimplicialComplex",
    "apply_bistellar",
    "boundary_simplex",
    "build_complex",
    "candidate_sites",
    "circle",
    "disjoint_union",
    "face",
    "is_isomorphic",
    "link",
    "orient",
    "orient_complex",
    "random_move_walk",
    "relative_sign",
    "reorder",
    "reverse_orientation",
    "staircase_product",
    "validate_singular_4manifold",
]
