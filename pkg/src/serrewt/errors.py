"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: usage and schema problems
(ParamError, LevelOneError, UnsupportedPrimeError) exit with 2, a breached
internal invariant (InternalInvariantError) exits with 3.
"""


class ParamError(ValueError):
    """An inertial parameter record violates the schema or a type invariant."""


class LevelOneError(ValueError):
    """A tame-character exponent is divisible by p+1, so the character pair
    is reducible on tame inertia and does not define a level-2 datum."""


class UnsupportedPrimeError(ValueError):
    """The prime 2 (or a non-prime) was passed where an odd prime is required."""


class InternalInvariantError(RuntimeError):
    """A condition that should be impossible by the underlying theorems was
    observed; this always indicates an implementation bug, not bad input."""
