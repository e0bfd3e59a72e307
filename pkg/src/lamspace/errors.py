"""Exception types raised by lamspace."""

from __future__ import annotations


class LamspaceError(Exception):
    """Base class for all errors raised by this package."""


class GapTooSmall(LamspaceError):
    """A weight gap is below the floor that keeps the inversion well conditioned."""

    def __init__(self, k: int, gap: float, floor: float):
        self.k = k
        self.gap = gap
        self.floor = floor
        super().__init__(
            f"gap at index {k} is {gap!r}, below the floor {floor!r}; "
            "dividing by it would amplify rounding noise"
        )


class InvalidWeights(LamspaceError):
    """Weights are not positive, strictly increasing, or not finite."""


class MissingLambda(LamspaceError):
    """A lambda-domain space was queried without weights."""


class UnknownWitness(LamspaceError):
    """The requested gallery witness does not exist."""


class VacuousPremise(LamspaceError):
    """An inclusion criterion was applied to a sequence outside the lambda-domain."""


class SubsetDepthTooLarge(LamspaceError):
    """Exhaustive subset enumeration was requested beyond the supported depth."""


class UnsupportedPair(LamspaceError):
    """No characterization is available for the requested (source, target) class."""
