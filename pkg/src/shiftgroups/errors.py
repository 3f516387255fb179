"""Exception hierarchy.

Everything that signals mathematically invalid input (as opposed to a
malformed file or a programming error) derives from KernelError, so the
CLI can map it to a dedicated exit code.
"""


class KernelError(Exception):
    """Base class for domain-level validation failures."""

    @property
    def code(self):
        return type(self).__name__


# graphs / paths / points
class DanglingEdge(KernelError):
    pass


class NotIrreducible(KernelError):
    pass


class IsCycle(KernelError):
    pass


class MixedGraphs(KernelError):
    pass


class NonComposable(KernelError):
    pass


class EmptyCycle(KernelError):
    pass


# tables
class EndpointMismatch(KernelError):
    pass


class DomainOverlap(KernelError):
    pass


class RangeOverlap(KernelError):
    pass


class NotDisjoint(KernelError):
    pass


class IndexOutOfRange(KernelError):
    pass


class NotInDomain(KernelError):
    pass


class InvalidMultisection(KernelError):
    pass


# sigma systems
class ZeroTable(KernelError):
    pass


class SourcesOverlap(KernelError):
    pass


class RangeMismatch(KernelError):
    pass


class InvalidSystem(KernelError):
    pass


class NotFullGroupElement(KernelError):
    pass


# homology
class InvalidArity(KernelError):
    pass


# Z-subshift full groups
class UnknownLetter(KernelError):
    pass


class NotPartition(KernelError):
    pass


class NotBijective(KernelError):
    pass


class WindowUndetermined(KernelError):
    pass


class RuleIncomplete(KernelError):
    pass


class UnsupportedIteration(KernelError):
    pass
