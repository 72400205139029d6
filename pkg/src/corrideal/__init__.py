"""Exact ideal calculus for C*-correspondences over finite-block algebras."""

from .core import BlockAlgebra, Correspondence, IdealSet, perp, validate_correspondence
from .extnat import INF, ExtNat
from .ideals import (
    closures,
    forward_image,
    invariance,
    inverse_image,
    relative_katsura,
    structural_ideals,
)
from .pairs import (
    IdealPair,
    PairKind,
    enumerate_pairs,
    ideal_generated_by,
    invariant_ideal_bijection,
    pair_is_valid,
    relcp_analyze,
)
from .constructions import (
    GraphDesc,
    bimodule_invariant,
    graph_to_correspondence,
    is_hilbert_bimodule,
    omega_correspondence,
    quotient_correspondence,
    restriction_correspondence,
)
from .structure import crosscheck_pairs_vs_ideals, ox_structure, quotient_structure_check
from .io import parse_input, load_input

__version__ = "0.1.0"

__all__ = [
    "BlockAlgebra",
    "Correspondence",
    "ExtNat",
    "GraphDesc",
    "INF",
    "IdealPair",
    "IdealSet",
    "PairKind",
    "bimodule_invariant",
    "closures",
    "crosscheck_pairs_vs_ideals",
    "enumerate_pairs",
    "forward_image",
    "graph_to_correspondence",
    "ideal_generated_by",
    "invariance",
    "invariant_ideal_bijection",
    "inverse_image",
    "is_hilbert_bimodule",
    "load_input",
    "omega_correspondence",
    "ox_structure",
    "pair_is_valid",
    "parse_input",
    "perp",
    "quotient_correspondence",
    "quotient_structure_check",
    "relative_katsura",
    "relcp_analyze",
    "restriction_correspondence",
    "structural_ideals",
    "validate_correspondence",
]
