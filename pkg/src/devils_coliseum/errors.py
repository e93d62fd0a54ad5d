"""Domain exceptions.

Outcomes that are expected results of a computation (failed trap certificates,
inconclusive disjointness, exhausted search budgets) are returned as values;
only invalid inputs and broken preconditions raise.
"""


class ColiseumError(Exception):
    """Base class for every error raised by devils_coliseum."""


class WeightError(ColiseumError, ValueError):
    """Weights do not form a probability vector of the required shape."""


class DegreeError(ColiseumError, ValueError):
    """A degree is too small for a generator or too large for explicit composition."""


class DuplicateGenerator(ColiseumError, ValueError):
    """Two generators of a system have identical coefficients."""


class AlphabetError(ColiseumError, ValueError):
    """A word uses digits outside the alphabet, or the alphabet size is unsupported."""


class RootSolveFailure(ColiseumError, ArithmeticError):
    """The simultaneous root iteration did not converge."""


class DisconnectedMask(ColiseumError, ValueError):
    """A mask that must be connected has more than one component."""


class TrichotomyViolation(ColiseumError):
    """None of the three overlap patterns of a 3-generator system was observed."""


class OrderViolation(ColiseumError):
    """Region means do not increase along the surrounding order."""

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


class UnsupportedSystem(ColiseumError, ValueError):
    """An interval system does not have the two-branch structure fixing 0 and 1."""


class ConfigError(ColiseumError, ValueError):
    """A run configuration is missing a key or holds an invalid value."""
