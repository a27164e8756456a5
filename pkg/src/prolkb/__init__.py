"""Exact three-variable LKB representation of the braid groups and its pro-nilpotent tower."""

from .groups import (
    GroupDescriptor,
    GroupElement,
    GroupMorphism,
    apply_morphism,
    ginv,
    gmul,
    lcs_layer,
    make_group,
    make_morphism,
    nilpotency_class,
    normalize,
)
from .lkb import (
    THETA,
    braid_equal,
    classical_matrix,
    enumerate_basis,
    sigma_matrix,
    theta_generators,
    verify_braid_relations,
    word_matrix,
)
from .matrix import RepMatrix, mat_identity, mat_invert_unit_triangularizable, mat_map, mat_mul
from .ring import RingElement, RingMorphism, r_map, r_mul
from .tower import check_tower, layer_sigma, make_layer

__version__ = "0.1.0"
