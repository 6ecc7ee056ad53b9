"""Exception hierarchy. The CLI reports ``type(err).__name__`` and exits 1."""


class GclError(Exception):
    """Base class for domain errors."""


class InvalidOrder(GclError, ValueError):
    pass


class GroupMismatch(GclError, ValueError):
    pass


class InvalidTarget(GclError, ValueError):
    pass


class InvalidPresentation(GclError, ValueError):
    pass


class NotGenerating(GclError, ValueError):
    pass


class Incomplete(GclError, ValueError):
    pass


class NotInDualMonoid(GclError, ValueError):
    pass


class NotAFunctional(GclError, ValueError):
    pass


class TooLarge(GclError, ValueError):
    pass


class InternalInconsistency(GclError, RuntimeError):
    pass


class NotSurjective(GclError, ValueError):
    pass


class NotInOmega(GclError, ValueError):
    pass


class DegenerateCase(GclError, ValueError):
    pass


class NonTerminating(GclError, RuntimeError):
    pass


class InvalidInput(GclError, ValueError):
    pass


class CharTwo(GclError, ValueError):
    pass


class TraceNotZero(GclError, ValueError):
    pass


class InconsistentInputs(GclError, ValueError):
    pass
