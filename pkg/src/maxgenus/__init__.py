"""Maximum genus and upper embeddability of multigraphs.

Core pieces: an immutable :class:`MultiGraph`, exact deficiency / maximum
genus via spanning-tree enumeration (compiled kernel with pure fallback),
vertex splitting and edge contraction with the flexibility predicates that
make them verdict-preserving, a flexible-edge reducer, and a generator of
upper-embeddable families grown from bouquets of circles.
"""

from .errors import (
    DisconnectedGraphError,
    GraphConstructionError,
    GuardExceededError,
    LoopContractionError,
    MaxgenusError,
    NotSpanningTreeError,
    ParseError,
    PreconditionError,
    SplitSpecError,
    UnknownEdgeError,
    UnknownVertexError,
)
from .multigraph import Component, ComponentPartition, MultiGraph, build
from .kernel import COMPILED, backend_name

__version__ = "0.1.0"

__all__ = [
    "MultiGraph",
    "Component",
    "ComponentPartition",
    "build",
    "COMPILED",
    "backend_name",
    "MaxgenusError",
    "GraphConstructionError",
    "UnknownVertexError",
    "UnknownEdgeError",
    "DisconnectedGraphError",
    "GuardExceededError",
    "NotSpanningTreeError",
    "PreconditionError",
    "SplitSpecError",
    "LoopContractionError",
    "ParseError",
    "__version__",
]
