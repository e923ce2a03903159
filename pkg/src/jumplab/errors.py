"""Exception types raised by jumplab.

Every error derives from :class:`JumplabError` so callers (notably the CLI)
can map whole families of failures to exit codes.
"""


class JumplabError(Exception):
    pass


class InputError(JumplabError):
    """Malformed or inconsistent input data."""


class SingularMatrix(JumplabError, ArithmeticError):
    pass


class NotSymmetric(InputError):
    pass


class NonPositiveResistance(InputError):
    pass


class NegativeResistance(InputError):
    pass


class DisconnectedNetwork(JumplabError):
    pass


class UnknownEdge(InputError, KeyError):
    pass


class UnknownVertex(InputError, KeyError):
    pass


class TooLargeForEnumeration(JumplabError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class BasisMismatch(InputError):
    pass


class NonCanonicalLabel(InputError):
    pass


class NonZeroDegree(InputError):
    pass
