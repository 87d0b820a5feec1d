"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HypergraphError(Exception):
    """Base class for all library errors."""


class ConstructionError(HypergraphError, ValueError):
    pass


class EmptyEdge(ConstructionError):
    pass


class VertexOutOfRange(ConstructionError, IndexError):
    pass


class IsolatedVertex(ConstructionError):
    pass


class DuplicateVertexInEdge(ConstructionError):
    pass


class PreconditionViolated(HypergraphError):
    """A required hypothesis does not hold for the given input."""


class PartitionFailure(HypergraphError):
    """A vertex landed in zero or several non-adjacency classes."""


class GreedyStall(HypergraphError):
    """First-fit found no free color for ``vertex``."""

    def __init__(self, vertex: int, palette_size: int):
        self.vertex = vertex
        self.palette_size = palette_size
        super().__init__(f"no free color among {palette_size} for vertex {vertex}")


class NotUniform(PreconditionViolated):
    pass


class NotLinear(PreconditionViolated):
    pass


class NotWeaklyDense(PreconditionViolated):
    def __init__(self, violations):
        self.violations = violations
        ks = ", ".join(f"k={k}: {len(w)} vertices" for k, w in violations)
        super().__init__(f"not weakly dense ({ks})")


class PartialColoring(HypergraphError):
    pass


class TooLarge(HypergraphError):
    pass


class NoColoringWithinLimit(HypergraphError):
    pass


class NotPrime(HypergraphError, ValueError):
    pass


class ExhaustedAttempts(HypergraphError):
    pass


class FormatError(HypergraphError, ValueError):
    """Malformed instance or coloring text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
