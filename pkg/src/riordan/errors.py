"""Exception hierarchy shared by every module of the package."""


class RiordanError(ValueError):
    """Base class for all precondition failures raised by this package."""


# exact core
class DoublePole(RiordanError):
    """A result would need a principal part longer than one term."""


class InexactWindow(RiordanError):
    """The leading coefficient needed by an operation lies outside the known window."""


class NonformalComposition(RiordanError):
    """The inner series of a composition has a nonzero (or unknown) constant term."""


class NotInvertible(RiordanError):
    pass


class NonSquareConstantTerm(RiordanError):
    pass


class OutOfWindow(RiordanError, IndexError):
    pass


# pairs and matrices
class WindowTooSmall(RiordanError):
    pass


class MismatchedF(RiordanError):
    pass


class NotProper(RiordanError):
    pass


class ResidualPole(RiordanError):
    """Applying a Laurent pair left a nonzero coefficient at degree -1."""


class UnknownTail(RiordanError):
    """A transposed action needs a vector whose infinite tail is known to vanish."""


# invariant engine
class InvariantViolation(RiordanError):
    """A claimed eigen-relation failed; ``index`` is the first offending entry."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotInvolution(RiordanError):
    pass


class NotPseudoInvolution(RiordanError):
    pass


class NotAppellForm(RiordanError):
    pass


class NotMinusOneAppell(RiordanError):
    pass


class NonpositiveDiagonal(RiordanError):
    pass


# expression language
class ExprSyntaxError(RiordanError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownName(RiordanError):
    pass
