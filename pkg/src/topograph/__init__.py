"""Disjointness graphs on the nonempty proper subsets of a finite set."""

from .core import (
    SimpleGraph,
    TopoGraph,
    are_isomorphic,
    build_topo_graph,
    corona,
    degree,
    induced_subgraph,
    is_adjacent,
    join,
    neighbors,
    to_simple,
)
from .errors import CapacityError, DisconnectedGraphError, RangeError, UnknownClaimError

__version__ = "0.1.0"

__all__ = [
    "SimpleGraph",
    "TopoGraph",
    "are_isomorphic",
    "build_topo_graph",
    "corona",
    "degree",
    "induced_subgraph",
    "is_adjacent",
    "join",
    "neighbors",
    "to_simple",
    "CapacityError",
    "DisconnectedGraphError",
    "RangeError",
    "UnknownClaimError",
]
