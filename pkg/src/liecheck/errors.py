"""Exception hierarchy.

Every error raised deliberately by the library derives from
:class:`LieCheckError`, so callers (and the CLI) can catch one type.
"""


class LieCheckError(Exception):
    """Base class for all library errors."""


class UsageError(LieCheckError):
    pass


# exact linear algebra
class EmptyGenerators(LieCheckError):
    pass


class NotInSpan(LieCheckError):
    pass


class DegenerateForm(LieCheckError):
    pass


class NotSublattice(LieCheckError):
    pass


# root systems
class UnsupportedRank(LieCheckError):
    pass


class NotARoot(LieCheckError):
    pass


class OrbitCapExceeded(LieCheckError):
    pass


class ChamberMismatch(LieCheckError):
    """The hard-coded chamber disagrees with the computed simple roots."""


# lattices
class TransversalIncomplete(LieCheckError):
    pass


# reversors
class PairingTooLarge(LieCheckError):
    pass


class ZeroCocharacter(LieCheckError):
    pass


class DecompositionNotFound(LieCheckError):
    pass


class Inapplicable(LieCheckError):
    pass


class EmptyRepresentation(LieCheckError):
    pass


class NotProper(LieCheckError):
    pass


class PreconditionViolated(LieCheckError):
    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = offending


class NoReversor(LieCheckError):
    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence or {}
