"""Exception hierarchy shared by every module of the package."""


class BiregularError(Exception):
    """Base class for all package errors."""


class MalformedInput(BiregularError, ValueError):
    pass


class BadParams(BiregularError, ValueError):
    pass


class IsolatedVertex(BiregularError, ValueError):
    pass


class NotBiregular(BiregularError, ValueError):
    pass


class NotRegular(BiregularError, ValueError):
    pass


class NotConnected(BiregularError, ValueError):
    pass


class InexactDivision(BiregularError, ArithmeticError):
    pass


class InternalParityError(BiregularError, AssertionError):
    """Raised when a bipartite characteristic polynomial fails to be even."""


class PrereqFailed(BiregularError):
    pass


class CapExceeded(BiregularError, ValueError):
    pass
