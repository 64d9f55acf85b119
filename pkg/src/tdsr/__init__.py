"""Exact tools for total domination reconfiguration on small graphs."""

from .domination import (
    DominationProfile,
    Gamma_t_closed,
    PrivateNbhd,
    domination_profile,
    enumerate_mtds,
    enumerate_tds,
    gamma_t_closed,
    has_Gamma_n_minus_1_structure,
    is_mtds,
    is_tds,
    leaves,
    private_neighbors,
    stems,
)
from .families import FamilySpec, generate, parse_family
from .graph import Graph, from_edge_list, to_dot
from .iso import is_isomorphic, matches_family
from .reconfig import ReconGraph, ReconPath, build, component_of, connectivity, d0, reconfigure

__version__ = "0.1.0"

__all__ = [
    "DominationProfile",
    "FamilySpec",
    "Gamma_t_closed",
    "Graph",
    "PrivateNbhd",
    "ReconGraph",
    "ReconPath",
    "build",
    "component_of",
    "connectivity",
    "d0",
    "domination_profile",
    "enumerate_mtds",
    "enumerate_tds",
    "from_edge_list",
    "gamma_t_closed",
    "generate",
    "has_Gamma_n_minus_1_structure",
    "is_isomorphic",
    "is_mtds",
    "is_tds",
    "leaves",
    "matches_family",
    "parse_family",
    "private_neighbors",
    "reconfigure",
    "stems",
    "to_dot",
]
