"""TAR reconfiguration graphs for vertex-set graph parameters."""

from .graph import Graph, parse_graph6, write_graph6
from .params import ParameterKind
from .tar import build_tar, connectivity_profile, tar_isomorphic

__version__ = "0.1.0"

__all__ = [
    "Graph", "ParameterKind", "build_tar", "connectivity_profile", "parse_graph6", "tar_isomorphic", "write_graph6",
]
