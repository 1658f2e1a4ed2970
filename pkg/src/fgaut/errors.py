"""Exception hierarchy shared by all fgaut modules."""


class FgautError(Exception):
    """Base class for every error raised by this package."""


class WordSyntaxError(FgautError):
    """A word string does not match the word grammar."""


class RankError(FgautError):
    """Generator index exceeds the ambient rank, or ranks disagree."""


class WordLengthError(FgautError):
    """A word or basis image grew past its configured length guard."""


class NotInverseError(FgautError):
    """Claimed inverse images do not invert the map on the basis."""


class NotInvolutionError(FgautError):
    """Operation requires an automorphism of order exactly two."""


class NotSoftInvolutionError(FgautError):
    """Operation requires a soft involution (trivial action mod 2)."""


class ParityError(FgautError):
    """rank - trace is odd, so the input was not a soft involution."""


class BudgetError(FgautError):
    """A bounded search or enumeration exceeded its configured budget."""


class NotInvertedError(FgautError):
    """The element is not sent to its inverse by the given involution."""


class NotPrimitiveError(FgautError):
    """The element does not belong to any basis of the free group."""


class NotApplicableError(FgautError):
    """The requested construction does not apply to this input."""


class SampleInconclusiveError(FgautError):
    """Sampled evidence was consistent but certificate verification failed."""


class UnknownSuiteError(FgautError):
    """Verification suite name is not recognised."""
