"""Exception types raised across the package."""


class CosetForgeError(Exception):
    """Base class for every error raised by cosetforge."""


class MalformedRecord(CosetForgeError, ValueError):
    pass


class NotBipartite(CosetForgeError, ValueError):
    pass


class DuplicateEdge(CosetForgeError, ValueError):
    pass


class LoopEdge(CosetForgeError, ValueError):
    pass


class UnknownName(CosetForgeError, KeyError):
    pass


class DegreeMismatch(CosetForgeError, ValueError):
    pass


class NotInvariant(CosetForgeError, ValueError):
    """A group element does not map the given blocks (or set) onto themselves."""


class NotSubgroup(CosetForgeError, ValueError):
    pass


class NotProper(CosetForgeError, ValueError):
    pass


class CapExceeded(CosetForgeError, RuntimeError):
    """A computation would need more elements than the configured cap allows."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class NotEdgeTransitive(CosetForgeError, ValueError):
    pass


class NotConnected(CosetForgeError, ValueError):
    pass


class NotCoreFree(CosetForgeError, ValueError):
    pass
