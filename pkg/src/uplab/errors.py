"""Exception types shared across the package."""


class UplabError(Exception):
    """Base class for all package-specific errors."""


class CompositeCharacteristic(UplabError):
    """Requested characteristic is not a prime number."""


class DegreeZero(UplabError):
    """Extension degree must be at least 1."""


class NoEmbedding(UplabError):
    """No field embedding exists between the given specs."""


class RationalField(UplabError):
    """Operation requires a finite field but got the rationals."""


class ZeroPolynomial(UplabError):
    """Operation is undefined for the zero polynomial."""


class FieldMismatch(UplabError):
    """Operands belong to different fields; embed explicitly first."""


class CurveInPlane(UplabError):
    """The plane contains the curve, so the section is not finite."""


class IncompleteSection(UplabError):
    """Some section points live beyond the allowed extension bound.

    Plane sections report this condition through a flag rather than by
    raising; the class exists so callers can tag the condition uniformly.
    """


class PointOffPlane(UplabError):
    """A point claimed to lie on a plane does not satisfy its equation."""


class GenericityExhausted(UplabError):
    """Rejection sampling failed to find a plane passing all predicates."""

    def __init__(self, message, fired=None):
        super().__init__(message)
        self.fired = dict(fired or {})


class EmptyConfiguration(UplabError):
    """Operation needs at least one point."""


class InconsistentInput(UplabError):
    """Numeric inputs violate a constraint that valid data cannot."""


class NotASubset(UplabError):
    """Claimed subset contains points outside the ambient configuration."""


class BudgetExceeded(UplabError):
    """Exhaustive enumeration would exceed the configured subset budget."""


class EmptySystem(UplabError):
    """The linear system has no nonzero members."""


class SubstitutionExhausted(UplabError):
    """No substitution point yields a squarefree specialization.

    The base field is too small; factor over an extension instead.
    """


class InvalidParameters(UplabError):
    """Parameters outside the documented domain."""


class DependentSample(UplabError):
    """Sampling failed to produce affinely independent curve points."""
