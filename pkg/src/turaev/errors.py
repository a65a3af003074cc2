"""Exception types shared across the package."""


class DiagramError(ValueError):
    """Malformed or unsupported input (bad PD code, link, bad braid word...)."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed.

    This never signals bad user input; it means a convention bug.
    """


class TreeCapExceeded(RuntimeError):
    """Spanning-tree enumeration produced more trees than the caller allowed."""

    def __init__(self, cap: int):
        super().__init__(f"more than {cap} spanning trees; raise --max-trees")
        self.cap = cap
