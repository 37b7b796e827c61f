"""Domain errors shared across the package."""

from __future__ import annotations


class FriezeError(Exception):
    """Base class for all frieze-domain errors."""


class ZeroEntryError(FriezeError):
    """A computed entry is zero where the defining rules forbid it."""

    def __init__(self, indices: tuple[int, int], message: str | None = None):
        self.indices = indices
        super().__init__(message or f"entry at {indices} is zero")


class WindowExceededError(FriezeError):
    """A seed row was queried outside its declared window."""

    def __init__(self, index: int, start: int, stop: int):
        self.index = index
        self.window = (start, stop)
        super().__init__(
            f"index {index} outside declared window [{start}, {stop})"
        )


class OrderViolationError(FriezeError):
    """A quiddity-style sequence does not close up (corner entry is not 1)."""


class ZeroMinorError(FriezeError):
    """A 2x2 column minor vanishes, so no frieze matrix can be formed."""

    def __init__(self, i: int, j: int):
        self.indices = (i, j)
        super().__init__(f"minor of columns ({i}, {j}) is zero")


class FactorizationImpossibleError(FriezeError):
    """The array is not rank one: some generalized 2x2 minor is nonzero."""

    def __init__(self, indices: tuple[int, int], message: str | None = None):
        self.indices = indices
        super().__init__(
            message
            or f"entry at {indices} breaks the rank-1 product structure"
        )
