"""Exception hierarchy for tpkit.

Construction-time failures derive from ValidationError so callers can catch
one class when building complexes from untrusted cell lists.  Everything else
derives from TpkitError directly.
"""

from __future__ import annotations


class TpkitError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(TpkitError):
    """A cell list violates one of the structural invariants."""


class InvalidIndex(ValidationError):
    def __init__(self, vertex: int, vertex_count: int, where: str):
        self.vertex = vertex
        self.vertex_count = vertex_count
        super().__init__(
            f"vertex {vertex} out of range 0..{vertex_count - 1} in {where}"
        )


class DegenerateCell(ValidationError):
    def __init__(self, cell):
        self.cell = tuple(cell)
        super().__init__(f"cell {self.cell} repeats a vertex")


class DuplicateCell(ValidationError):
    def __init__(self, cell):
        self.cell = tuple(cell)
        super().__init__(f"cell {self.cell} appears more than once")


class PentagonChord(ValidationError):
    def __init__(self, pentagon, chord):
        self.pentagon = tuple(pentagon)
        self.chord = tuple(chord)
        super().__init__(
            f"pentagon {self.pentagon} has chord {self.chord}"
        )


class Full4Cycle(ValidationError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"induced 4-cycle {self.cycle} in the 1-skeleton")


class UnfilledTriangleClique(ValidationError):
    def __init__(self, clique):
        self.clique = tuple(clique)
        super().__init__(
            f"3-clique {self.clique} is not filled by a triangle cell"
        )


class SharedEdges(ValidationError):
    def __init__(self, cell_a, cell_b, edges):
        self.cell_a = tuple(cell_a)
        self.cell_b = tuple(cell_b)
        self.edges = tuple(edges)
        super().__init__(
            f"cells {self.cell_a} and {self.cell_b} share edges {self.edges}"
        )


class NonManifoldEdge(ValidationError):
    def __init__(self, edge, count: int):
        self.edge = tuple(edge)
        self.count = count
        super().__init__(f"edge {self.edge} lies in {count} 2-cells")


class FlagViolation(ValidationError):
    def __init__(self, clique, kind: str):
        self.clique = tuple(clique)
        self.kind = kind  # "unfilled-clique" or "four-clique"
        if kind == "four-clique":
            msg = f"4-clique {self.clique} in the edge graph (not 2-dimensional)"
        else:
            msg = f"3-clique {self.clique} spans no triangle (not flag)"
        super().__init__(msg)


class NotFlag(TpkitError):
    def __init__(self, clique):
        self.clique = tuple(clique)
        super().__init__(f"complex is not flag: unfilled 3-clique {self.clique}")


class NonManifoldVertex(TpkitError):
    pass


class VertexNotInCell(TpkitError):
    def __init__(self, vertex: int, cell):
        self.vertex = vertex
        self.cell = tuple(cell)
        super().__init__(f"vertex {vertex} is not a corner of cell {self.cell}")


class RadiusTooLarge(TpkitError):
    def __init__(self, radius: int, limit: int):
        self.radius = radius
        self.limit = limit
        super().__init__(f"radius {radius} exceeds the supported bound {limit}")


class GenerationBudgetExceeded(TpkitError):
    def __init__(self, attempts: int, cells: int, target: int):
        self.attempts = attempts
        self.cells = cells
        self.target = target
        super().__init__(
            f"gave up after {attempts} attachment attempts "
            f"({cells} of {target} cells built)"
        )


class SchemaError(TpkitError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class UnknownWitnessReference(TpkitError):
    def __init__(self, reference: str, message: str):
        self.reference = reference
        super().__init__(f"cannot resolve highlight {reference!r}: {message}")
