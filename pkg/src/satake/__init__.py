"""Exact combinatorics of dominant coweights: weight multiplicities, tensor
products, and dimension counts for orbits in the affine Grassmannian."""

from .errors import SatakeError
from .fusion import (
    Character,
    decompose,
    dual_object,
    fiber_functor_grading,
    irreducible_character,
    product,
    satake_report,
    tensor_decompose,
)
from .grassmannian import (
    closure_contains,
    convolution_fiber_bound,
    mv_cycle_count,
    orbit_dim,
    s_intersection_dim,
    semismall_defect,
    t_intersection_dim,
)
from .multiplicity import (
    weight_multiplicity_freudenthal,
    weight_multiplicity_kostant,
    weight_table,
    weyl_dimension,
)
from .rootdatum import RootDatum, build_from_cartan_type, langlands_dual, validate
from .weyl import dominant_coweights, doubled_height, longest_element_image

__all__ = [
    "Character",
    "RootDatum",
    "SatakeError",
    "build_from_cartan_type",
    "closure_contains",
    "convolution_fiber_bound",
    "decompose",
    "dominant_coweights",
    "doubled_height",
    "dual_object",
    "fiber_functor_grading",
    "irreducible_character",
    "langlands_dual",
    "longest_element_image",
    "mv_cycle_count",
    "orbit_dim",
    "product",
    "s_intersection_dim",
    "satake_report",
    "semismall_defect",
    "t_intersection_dim",
    "tensor_decompose",
    "validate",
    "weight_multiplicity_freudenthal",
    "weight_multiplicity_kostant",
    "weight_table",
    "weyl_dimension",
]
