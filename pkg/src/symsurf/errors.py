"""Exception types shared across the package."""


class SymsurfError(Exception):
    """Base class for every error raised by symsurf."""


# permutation groups
class CycleSyntaxError(SymsurfError, ValueError):
    """Cycle notation does not follow the accepted grammar."""


class RepeatedPoint(SymsurfError, ValueError):
    """A point occurs twice in a cycle-notation string."""


class BudgetExceeded(SymsurfError):
    """An enumeration or search ran past its configured cap."""


class NotAnElement(SymsurfError, ValueError):
    """A permutation is not a member of the group it was used with."""


class NotASubgroup(SymsurfError, ValueError):
    """A claimed subgroup contains elements outside the parent group."""


# graphs
class SelfLoop(SymsurfError, ValueError):
    """A monomial or edge joins a node to itself."""


class NotDegreeThree(SymsurfError, ValueError):
    """The node does not have exactly three incident edges."""


class NotCubic(SymsurfError, ValueError):
    """The graph is not 3-regular."""


class OverlappingTriangles(SymsurfError, ValueError):
    """Two triangles share a node, so they cannot be contracted independently."""


# constructions
class GeneratorsDoNotGenerate(SymsurfError, ValueError):
    """The listed generators do not generate the given group."""


class ArityMismatch(SymsurfError, ValueError):
    """The construction variant needs a different number of generators."""


class NTooSmall(SymsurfError, ValueError):
    """The family parameter is below the smallest admissible value."""


class NotCubicConnectionSet(SymsurfError, ValueError):
    """The connection set does not give every node degree three."""


class DoesNotGenerate(SymsurfError, ValueError):
    """The connection set does not generate the group."""


class NotCubicResult(SymsurfError, ValueError):
    """The orbital construction did not produce a cubic graph."""


# cycle double covers
class UnknownNode(SymsurfError, ValueError):
    """A cycle refers to a node outside the graph."""


class ImproperColouring(SymsurfError, ValueError):
    """Two edges of the same colour meet at a node."""


class ParamMismatch(SymsurfError, ValueError):
    """Family parameters do not match the requested cover kind."""


class TranscribedCoverInvalid(SymsurfError, ValueError):
    """A closed-form cover, taken literally, is not a cycle double cover."""


class NotAutomorphism(SymsurfError, ValueError):
    """A permutation does not preserve the edge multiset."""


# surfaces and embeddings
class InvalidCover(SymsurfError, ValueError):
    """The cover cannot be turned into a simplicial surface."""


class InvalidParams(SymsurfError, ValueError):
    """Embedding parameters violate the admissibility conditions."""


class DegenerateGeometry(SymsurfError, ValueError):
    """Parameters sit on the boundary where the geometry collapses."""


class SingularSystem(SymsurfError, ValueError):
    """The barycentric linear system has no unique solution."""


class NotVertexFaithful(SymsurfError, ValueError):
    """The operation needs a vertex-faithful surface."""


# files
class MalformedFile(SymsurfError, ValueError):
    """An input file could not be decoded."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
