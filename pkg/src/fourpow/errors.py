"""Exception hierarchy.

Every domain error derives from :class:`FourPowError`, which is a
``ValueError`` so callers that only care about bad input can catch that.
"""


class FourPowError(ValueError):
    pass


class InvalidPath(FourPowError):
    pass


class NotInClass(FourPowError):
    pass


class RankOutOfRange(FourPowError):
    pass


class NoReturn(FourPowError):
    pass


class NotADyckPath(NotInClass):
    pass


class NotABridge(NotInClass):
    pass


class NotAPeak(FourPowError):
    pass


class MalformedBits(FourPowError):
    pass


class InvalidComposition(FourPowError):
    pass


class InvalidColoredComposition(InvalidComposition):
    pass


class SizeMismatch(FourPowError):
    pass


class OddLength(FourPowError):
    pass


class NotStartingDown(FourPowError):
    pass


class LabelOutOfRange(FourPowError):
    pass


class NotAStrictMaximum(FourPowError):
    pass


class ClassSizeMismatch(FourPowError):
    """Two statistic classes that should be equinumerous are not."""


class UnknownClass(FourPowError):
    pass


class UnknownSuite(FourPowError):
    pass


class UnknownSequence(FourPowError):
    pass
