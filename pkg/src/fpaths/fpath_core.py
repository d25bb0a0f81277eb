"""Core F-path objects: validation, statistics, involution, direct sums.

An *F-path* of length n is a sequence of steps from

    F = {(a, b) : a >= 1, b <= 1}  ∪  {(0, 1)}

such that every prefix satisfies sum(dx) <= sum(dy).  Steps are pairs
``(a, b)`` of ints, paths are tuples of steps.  The empty path is the
single path of length 0.

Statistics (``fpath_stats``):

    height  terminal sum(dy) - sum(dx)
    north   number of (0, 1) steps
    aone    number of steps with a == 1
    bone    number of steps with b == 1  (includes the (0, 1) steps)

Every path satisfies ``height <= north <= bone``.

>>> q = validate_fpath([(0, 1), (2, 1)])
>>> fpath_stats(q)
(StatTriple(h=0, l=1, a1=0), 2)
"""
from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import GuardExceeded, PrefixViolation, StepNotInF

FStep = tuple[int, int]
FPath = tuple[FStep, ...]

NORTH: FStep = (0, 1)

#: Default ceiling on the path length accepted by :func:`gen_fpaths`.
#: Counts grow roughly 4.4x per unit of n, so 10 (~half a million paths)
#: is the largest size that is comfortable to materialize by accident.
DEFAULT_GUARD = 10


class StatTriple(NamedTuple):
    """The joint statistic (height, north, aone) carried by every family."""

    h: int
    l: int
    a1: int


def step_in_f(step) -> bool:
    """True if ``step`` is a legal F step."""
    a, b = step
    return (a == 0 and b == 1) or (a >= 1 and b <= 1)


def validate_fpath(steps: Iterable[Iterable[int]]) -> FPath:
    """Normalize ``steps`` to a tuple of int pairs and check the F-path axioms.

    Raises :class:`StepNotInF` for a step outside F (0-based position) and
    :class:`PrefixViolation` with the 1-based length of the shortest prefix
    where sum(dx) exceeds sum(dy).

    >>> validate_fpath([(2, 1), (0, 1)])
    Traceback (most recent call last):
        ...
    fpaths.errors.PrefixViolation: prefix of length 1 has sum(dx) > sum(dy)
    """
    path = []
    sx = sy = 0
    for pos, raw in enumerate(steps):
        a, b = raw
        step = (int(a), int(b))
        if not step_in_f(step):
            raise StepNotInF(step, pos)
        sx += step[0]
        sy += step[1]
        if sx > sy:
            raise PrefixViolation(pos + 1)
        path.append(step)
    return tuple(path)


def fpath_height(q: FPath) -> int:
    """Terminal height sum(dy) - sum(dx) of a (pre-validated) path."""
    return sum(b - a for a, b in q)


def fpath_stats(q: FPath) -> tuple[StatTriple, int]:
    """Return ``(StatTriple(height, north, aone), bone)``.

    >>> fpath_stats(((0, 1), (1, 1)))
    (StatTriple(h=1, l=1, a1=1), 2)
    """
    h = l = a1 = bone = 0
    for a, b in q:
        h += b - a
        if (a, b) == NORTH:
            l += 1
        if a == 1:
            a1 += 1
        if b == 1:
            bone += 1
    return StatTriple(h, l, a1), bone


def involution_phi_F(q: FPath) -> FPath:
    """The step-local involution fixing (0,1) and mapping (a,b) -> (2-b, 2-a).

    It preserves every prefix height (hence validity), ``height`` and
    ``north``, and swaps ``aone <-> bone - north``:

    >>> involution_phi_F(((0, 1), (3, -1)))
    ((0, 1), (3, -1))
    >>> involution_phi_F(((0, 1), (2, 1)))
    ((0, 1), (1, 0))
    """
    return tuple(s if s == NORTH else (2 - s[1], 2 - s[0]) for s in q)


# ------------------------------------------------------------ enumeration


def _extensions(height: int) -> Iterator[FStep]:
    # Canonical step order: (0,1) first, then a ascending, b descending.
    yield NORTH
    for a in range(1, height + 2):
        for b in range(1, a - height - 1, -1):
            yield (a, b)


def _gen(n: int, height: int) -> Iterator[FPath]:
    if n == 0:
        yield ()
        return
    for step in _extensions(height):
        a, b = step
        for rest in _gen(n - 1, height + b - a):
            yield (step,) + rest


def gen_fpaths(n: int, guard: int = DEFAULT_GUARD) -> tuple[FPath, ...]:
    """All F-paths of length ``n`` in canonical order.

    The order is lexicographic by step sequence, where steps sort with
    (0,1) first, then by a ascending and b descending — so the six paths
    of length 2 come out as

    >>> for q in gen_fpaths(2):
    ...     print(q)
    ((0, 1), (0, 1))
    ((0, 1), (1, 1))
    ((0, 1), (1, 0))
    ((0, 1), (2, 1))
    ((1, 1), (0, 1))
    ((1, 1), (1, 1))
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > guard:
        raise GuardExceeded(n, guard)
    return tuple(_gen(n, 0))


# ------------------------------------------------------------ direct sums


def fpath_direct_sum(q1: FPath, q2: FPath) -> FPath:
    """Concatenate with a fresh (0,1) separator: ``q1 + (0,1) + q2``."""
    return tuple(q1) + (NORTH,) + tuple(q2)


def fpath_decompose(q: FPath) -> list[FPath]:
    """Split ``q`` into height-0 components at its canonical separators.

    A path of height m decomposes uniquely as
    ``R_1 (0,1) R_2 (0,1) ... (0,1) R_{m+1}`` where each ``R_i`` is an
    F-path of height 0.  The i-th separator is the *last* (0,1) step whose
    prefix height equals i: any later (0,1) landing at height i would put
    a dip below i after an earlier candidate, and only (0,1) steps gain
    height, so that choice is forced.

    Returns the list ``[R_1, ..., R_{m+1}]`` (length ``height(q) + 1``).

    >>> fpath_decompose(((0, 1), (1, 0), (0, 1)))
    [((0, 1), (1, 0)), ()]
    """
    heights = []
    h = 0
    for a, b in q:
        h += b - a
        heights.append(h)
    m = h if q else 0
    last_at = {}
    for pos, step in enumerate(q):
        if step == NORTH:
            last_at[heights[pos]] = pos
    seps = [last_at[i] for i in range(1, m + 1)]
    parts = []
    start = 0
    for p in seps:
        parts.append(tuple(q[start:p]))
        start = p + 1
    parts.append(tuple(q[start:]))
    return parts


if __name__ == "__main__":
    for n in range(5):
        print(n, len(gen_fpaths(n)))
