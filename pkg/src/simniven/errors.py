"""Exception hierarchy shared by all modules."""


class NivenError(Exception):
    """Base class for every error raised by simniven."""


class DomainError(NivenError, ValueError):
    """An argument lies outside the domain of the operation."""


class NotInvertibleError(DomainError):
    """``a`` has no multiplicative order modulo ``N`` because gcd(a, N) != 1."""


class ResourceLimitError(NivenError):
    """A configured iteration or size cap would be exceeded."""


class ValidationError(DomainError):
    """Construction parameters violate a hypothesis of the theorem."""


class BaseTooSmallError(ValidationError):
    pass


class ExponentTooSmallError(ValidationError):
    pass


class ModulusTooSmallError(ValidationError):
    pass


class ResidueOutOfRangeError(ValidationError):
    pass


class ModulusNotCoprimeError(ValidationError):
    pass


class InadmissibleError(DomainError):
    """A digit-sum target ``s`` fails s = r (mod m) or gcd(s, b) = 1."""
