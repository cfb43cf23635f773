"""Formal geometric quantization of non-compact Hamiltonian spaces,
computed exactly through representation theory."""
from .branching import SubgroupEmbedding, branch, branch_element, identity_embedding
from .characters import (
    CharacterElement,
    decompose_weights,
    dim,
    dual,
    tensor,
    tensor_elements,
    weight_multiplicities,
)
from .errors import FQError
from .lie import PSU, SU, U, GroupSpec, RootSystem, Torus, build_root_system, group
from .models import (
    CoadjointOrbitModel,
    HermitianModel,
    hermitian_quantization,
    orbit_quantization,
    product_model_quantization,
    properness_check,
    reduced_space_multiplicity,
    restriction_radius_bound,
)
from .polytope import AdaptedPolytope, check_adapted, dilate
from .series import FormalSeries, equal_up_to, multiply_by_character, restrict_series
from .verify import verify_convergence, verify_product_identity, verify_restriction_identity

__version__ = "0.1.0"
