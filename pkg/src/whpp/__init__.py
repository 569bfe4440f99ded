"""Exact matroid toolkit: degenerate quadrangles, dim V / dim W, Tutte group invariants, WHPP verdicts."""

from .analysis import (
    NOT_WHPP,
    UNDETERMINED,
    WHPP,
    WHPP_IFF_HPP,
    Verdict,
    WeightFunction,
    cauchy_binet_weights,
    dim_V,
    tutte_invariants,
    verify_quadrangle_relations,
    whpp_verdict,
)
from .builders import (
    GFMatrix,
    RationalMatrix,
    affine_geometry,
    from_matrix,
    graphic,
    projective_geometry,
    uniform,
)
from .catalog import TABLE1, catalog, list_catalog
from .errors import MatroidError, ParseError
from .linalg import AbelianInvariants, IntegerMatrix, smith_normal_form
from .matroid import (
    Matroid,
    connected_components,
    dim_W,
    direct_sum,
    dual,
    from_bases,
    has_minor,
    is_binary,
    is_isomorphic,
    is_regular,
    minor,
    relax,
)
from .quadrangles import (
    DegenerateQuadrangle,
    enumerate_degenerate_quadrangles,
    relation_matrix,
    signed_tutte_relations,
)

__all__ = [
    "NOT_WHPP", "UNDETERMINED", "WHPP", "WHPP_IFF_HPP", "Verdict", "WeightFunction",
    "cauchy_binet_weights", "dim_V", "tutte_invariants", "verify_quadrangle_relations",
    "whpp_verdict", "GFMatrix", "RationalMatrix", "affine_geometry", "from_matrix",
    "graphic", "projective_geometry", "uniform", "TABLE1", "catalog", "list_catalog",
    "MatroidError", "ParseError", "AbelianInvariants", "IntegerMatrix", "smith_normal_form",
    "Matroid", "connected_components", "dim_W", "direct_sum", "dual", "from_bases",
    "has_minor", "is_binary", "is_isomorphic", "is_regular", "minor", "relax",
    "DegenerateQuadrangle", "enumerate_degenerate_quadrangles", "relation_matrix",
    "signed_tutte_relations",
]
