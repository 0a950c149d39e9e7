"""Finite ultrametric spaces and the vertex-labeled trees that generate them."""

from .diametrical import DiametralPartition, diametral_partition, has_singleton_part
from .labeled_tree import (
    LabeledTree,
    ball_subtree,
    d_l,
    generates_ultrametric,
    space_from_tree,
    validate_tree,
)
from .rational import Rat, format_rat, parse_rat
from .represent import (
    CanonicalCode,
    Node,
    RootedLabeledTree,
    canonical_code,
    hausdorff_distance,
    isometric,
    isomorphic_rooted,
    realize_space,
    representing_tree,
    validate_representing_shape,
)
from .space import (
    Ball,
    UltraSpace,
    centered_sphere_center,
    centered_spheres,
    diameter,
    induced_subspace,
    is_discrete,
    open_balls,
    validate_space,
)
from .ugvl import (
    ExtensionResult,
    delta,
    generating_tree,
    is_ugvl,
    is_ugvl_extension,
    minimal_extension,
)

__all__ = [name for name in dir() if not name.startswith("_")]
