"""Exception types shared across the package."""


class EffectTopoError(Exception):
    """Base class for all library errors."""


class MalformedTableError(EffectTopoError):
    """A partial-sum table is structurally broken: unknown elements, indices
    out of range, or the two orientations of a pair disagree.

    Structural breakage is an exception; an *axiom* violation is data and is
    reported through :class:`~effecttopo.algebra.ValidationReport` instead.
    """


class InvalidAlgebraError(EffectTopoError):
    """A derived operation was invoked on a table that fails the axioms."""


class CarrierCapError(EffectTopoError):
    """A construction or enumeration would exceed the configured size cap."""


class DimensionMismatchError(EffectTopoError):
    """Operands act on spaces of different dimension."""


class NonHermitianError(EffectTopoError):
    """Matrix input is not self-adjoint within tolerance."""


class NotPsdError(EffectTopoError):
    """Matrix input is not positive semidefinite within tolerance."""


class ConvergenceError(EffectTopoError):
    """An iterative kernel failed to reach its stopping criterion."""


class NumericsError(EffectTopoError):
    """An internal numeric cross-check drifted beyond its pinned bound."""


class LoweringError(EffectTopoError):
    """A parsed document cannot be lowered to a partial-sum table."""


class MissingCheckError(EffectTopoError):
    """A relation edge references a check id that was never executed."""


class ScenarioFormatError(EffectTopoError):
    """A JSON scenario file does not match the documented schema."""
