"""Exception types shared across the package."""


class MaxgenusError(Exception):
    """Base class for all errors raised by maxgenus."""


class GraphConstructionError(MaxgenusError):
    """Malformed input to a graph constructor (dangling endpoint, duplicate id)."""


class UnknownVertexError(MaxgenusError):
    pass


class UnknownEdgeError(MaxgenusError):
    pass


class DisconnectedGraphError(MaxgenusError):
    """An operation defined only for connected graphs got a disconnected one."""


class GuardExceededError(MaxgenusError):
    """Spanning-tree enumeration refused: the graph exceeds the edge cap.

    The cap exists because enumeration is exponential; callers must raise it
    explicitly to confirm they accept the cost.
    """

    def __init__(self, edge_count: int, cap: int):
        super().__init__(
            f"graph has {edge_count} edges, enumeration cap is {cap}; "
            f"raise the cap explicitly to proceed"
        )
        self.edge_count = edge_count
        self.cap = cap


class NotSpanningTreeError(MaxgenusError):
    pass


class PreconditionError(MaxgenusError):
    """A documented precondition of an operation failed; the message names it."""


class SplitSpecError(MaxgenusError):
    """Invalid vertex-splitting specification."""


class LoopContractionError(MaxgenusError):
    """Contraction of a loop was requested; loops are never contractible here."""


class ParseError(MaxgenusError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
