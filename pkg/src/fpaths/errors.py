"""Exception hierarchy shared by every module in the package.

All domain errors derive from :class:`FpathsError`, itself a
``ValueError``, so callers can catch one base class.  Errors that point
at a specific location carry an ``index`` attribute; the convention for
each class is stated in its docstring and is deliberately frozen by the
test suite (several tools consume these indexes).
"""
from __future__ import annotations


class FpathsError(ValueError):
    """Base class for every domain error raised by this package."""


# ---------------------------------------------------------------- F-paths


class StepNotInF(FpathsError):
    """A step (a, b) lies outside F = {a>=1, b<=1} ∪ {(0,1)}."""

    def __init__(self, step, position):
        self.step = tuple(step)
        self.position = position
        super().__init__(f"step {self.step} at position {position} is not in F")


class PrefixViolation(FpathsError):
    """A prefix of the path has sum(dx) > sum(dy).

    ``index`` is the 1-based length of the shortest offending prefix.
    """

    def __init__(self, index):
        self.index = index
        super().__init__(f"prefix of length {index} has sum(dx) > sum(dy)")


class GuardExceeded(FpathsError):
    """An enumeration size guard was exceeded; pass a larger guard to override."""

    def __init__(self, requested, guard):
        self.requested = requested
        self.guard = guard
        super().__init__(
            f"requested size {requested} exceeds guard {guard}; "
            f"pass guard={requested} to force"
        )


# ------------------------------------------------- lattice-path families


class BelowAxis(FpathsError):
    """A path letter would take the path below the x-axis (0-based index)."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"letter {index} takes the path below the x-axis")


class NotClosed(FpathsError):
    """The path does not return to the x-axis at its right end."""

    def __init__(self, height):
        self.height = height
        super().__init__(f"path ends at height {height}, not 0")


class TripleDescent(FpathsError):
    """A Schröder word contains DDD; ``index`` is the 0-based factor start."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"triple descent starting at letter {index}")


class RunFormViolation(FpathsError):
    """A bicolored word breaks the run form u..dr..db.. (0-based index)."""

    def __init__(self, index, reason=""):
        self.index = index
        msg = f"run form broken at letter {index}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


# --------------------------------------- permutations / inversion sequences


class NotAvoider(FpathsError):
    """The object contains one of the family's forbidden patterns."""

    def __init__(self, pattern, positions=None):
        self.pattern = tuple(pattern)
        self.positions = tuple(positions) if positions is not None else None
        where = f" at positions {self.positions}" if positions is not None else ""
        super().__init__(f"contains pattern {self.pattern}{where}")


class FormViolation(FpathsError):
    """The object breaks a structural form (inversion bound, run form, ...)."""


# ----------------------------------------------------------------- trees


class WeightOutOfRange(FpathsError):
    """An interior vertex weight is not in 1..outdegree (preorder ``vertex``)."""

    def __init__(self, vertex, weight, outdeg):
        self.vertex = vertex
        self.weight = weight
        self.outdeg = outdeg
        super().__init__(
            f"vertex {vertex} has weight {weight!r}, expected 1..{outdeg}"
        )


class WeightOnLeafOrRoot(FpathsError):
    """The root or a leaf carries a weight (preorder ``vertex``, root = 0)."""

    def __init__(self, vertex, weight):
        self.vertex = vertex
        self.weight = weight
        super().__init__(f"vertex {vertex} must be unweighted, got {weight!r}")


# -------------------------------------------------------- counting / text


class InexactDivision(FpathsError):
    """An integer division in a counting formula left a remainder (internal bug)."""

    def __init__(self, numerator, denominator):
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"{numerator} is not divisible by {denominator}")


class ParseError(FpathsError):
    """A text form could not be parsed; ``offset`` is the 0-based byte offset."""

    def __init__(self, offset, message):
        self.offset = offset
        super().__init__(f"parse error at offset {offset}: {message}")
