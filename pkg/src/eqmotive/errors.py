"""Exception hierarchy.

Every domain error carries a stable class name; the command line prints
``ErrorName: message`` and exits with status 1 for any subclass of
:class:`DomainError`.
"""


class DomainError(Exception):
    """Base class for errors that describe invalid mathematical input."""

    @property
    def name(self) -> str:
        return type(self).__name__


class DivisionByZero(DomainError):
    pass


class GroupMismatch(DomainError):
    pass


class ZeroPivot(DomainError):
    pass


class InternalInconsistency(DomainError):
    pass


class TowerMismatch(DomainError):
    pass


class NonIntegerInput(DomainError):
    pass


class NotPrime(DomainError):
    pass


class ProfileTooLarge(DomainError):
    pass


class InvalidProfile(DomainError):
    pass


class InvalidKnot(DomainError):
    pass


class UnsupportedRank(DomainError):
    pass


class MissingBaseline(DomainError):
    pass


class TooLarge(DomainError):
    pass


class CatalogError(DomainError):
    """The pattern catalog is malformed or refers to an unknown entry."""
