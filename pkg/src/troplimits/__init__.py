"""Exact tropical geometry for systems of toric embeddings.

Cones, fans and Hilbert bases; extended tropicalizations of toric
varieties; tropical hypersurfaces and prevarieties over trivially valued,
p-adic and t-adic fields; and finite-stage checks on diagrams of toric
embeddings of a fixed variety.
"""
from .scalars import INF, TADIC, TRIVIAL, FieldConfig, TPoly, padic, val
from .polyhedral import Cone, Fan, cone, dual_cone, hilbert_basis, make_cone
from .tropspace import ExtendedPoint, TropMap, trop_map_apply, trop_map_apply_dual
from .polynomials import LaurentPoly, RationalFunction
from .tropvar import KPoint, Membership, Weight, extended_membership, trop_hypersurface
from .systems import BaseChart, EmbeddingSystem

__all__ = [
    "INF", "TADIC", "TRIVIAL", "FieldConfig", "TPoly", "padic", "val",
    "Cone", "Fan", "cone", "dual_cone", "hilbert_basis", "make_cone",
    "ExtendedPoint", "TropMap", "trop_map_apply", "trop_map_apply_dual",
    "LaurentPoly", "RationalFunction",
    "KPoint", "Membership", "Weight", "extended_membership", "trop_hypersurface",
    "BaseChart", "EmbeddingSystem",
]
__version__ = "0.1.0"
