"""Exception hierarchy.

``DomainError`` covers bad input and requests outside the supported
product rules; ``CertificationError`` means a mathematical check failed
and is reported separately by the command line (exit code 2).
"""


class DomainError(ValueError):
    pass


class SymbolParseError(DomainError):
    pass


class UnsupportedProductError(DomainError):
    pass


class NotApplicableError(DomainError):
    pass


class CertificationError(RuntimeError):
    pass
