"""Exception hierarchy. Every domain failure derives from ``DomainError``."""


class DomainError(ValueError):
    """A precondition of a library operation was violated."""


class NoCanonicalWord(DomainError):
    pass


class SignsAgree(DomainError):
    pass


class LimitExceeded(DomainError):
    pass


class ParityMismatch(DomainError):
    pass


class UnsupportedCase(DomainError):
    pass


class Undefined(DomainError):
    pass


class NotCanonical(DomainError):
    pass


class CatalogInconsistent(DomainError):
    pass


class RewriteBudgetExceeded(RuntimeError):
    """Normalization failed to terminate within its step budget (a bug, not bad input)."""
