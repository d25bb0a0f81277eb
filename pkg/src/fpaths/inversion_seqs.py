"""Two pattern-avoiding inversion-sequence families tied to F-paths.

An inversion sequence of length L is an integer tuple with
0 <= e_i <= i - 1 (1-based i).  Patterns are matched as *words*: a
subsequence matches pattern w if its letter-for-letter order type (with
equalities) is w.  The two families here:

    family "I"   avoids 101 and 102
    family "J"   avoids 101 and 021

Sequences of length n+1 map to F-paths of length n.

Statistics (both families use omi; ranges are over [L-1], L = len):

    omi    values in 1..L-1 missing from e
    cons   indexes i in [L-1] with e contains both ... (family I)
    single values occurring exactly once (family J)

    family I:  (maxid - max - 1,  omi,  cons)  =  (height, north, aone)
    family J:  (first - 1,        omi,  single) = (height, north, aone)

where maxid is the *rightmost* position holding the maximum, and first
is the number of leading zeros.
"""
from __future__ import annotations

from itertools import combinations

from .errors import FormViolation, GuardExceeded, NotAvoider
from .fpath_core import FPath, StatTriple, fpath_height

InvSeq = tuple[int, ...]

FAMILY_I = "I"  # avoids 101, 102
FAMILY_J = "J"  # avoids 101, 021

_PATTERNS = {FAMILY_I: ((1, 0, 1), (1, 0, 2)), FAMILY_J: ((1, 0, 1), (0, 2, 1))}


def word_reduction(word) -> tuple[int, ...]:
    """Order type of a word, ranks from 0, ties kept.

    >>> word_reduction((5, 2, 5))
    (1, 0, 1)
    """
    ranks = {v: r for r, v in enumerate(sorted(set(word)))}
    return tuple(ranks[v] for v in word)


def invseq_contains(e, pattern) -> bool:
    """True if some subsequence of e reduces to ``pattern``."""
    pattern = tuple(pattern)
    k = len(pattern)
    return any(
        word_reduction(sub) == pattern for sub in combinations(e, k)
    )


def validate_invseq(entries, family: str | None = None) -> InvSeq:
    """Check the inversion bound and, if ``family`` given, avoidance."""
    e = tuple(int(v) for v in entries)
    for i, v in enumerate(e, 1):
        if not 0 <= v <= i - 1:
            raise FormViolation(f"entry {v} at position {i} outside 0..{i - 1}")
    if family is not None:
        for pat in _PATTERNS[family]:
            if invseq_contains(e, pat):
                raise NotAvoider(pat)
    return e


def max_and_maxid(e: InvSeq) -> tuple[int, int]:
    """(max value, rightmost 1-based position of the max)."""
    m = max(e)
    return m, len(e) - e[::-1].index(m)


def _omi(e: InvSeq) -> int:
    present = set(e)
    return sum(1 for v in range(1, len(e)) if v not in present)


# ---------------------------------------------------------------- family I


def stats_I(e: InvSeq) -> StatTriple:
    """(maxid - max - 1, omi, cons) for a nonempty I-avoider.

    cons counts i in [L-1] with i-1 and i both present as entries --
    equivalently positions where the running staircase continues.
    """
    m, mi = max_and_maxid(e)
    present = set(e)
    cons = sum(1 for v in range(1, len(e)) if v in present and v - 1 in present)
    return StatTriple(mi - m - 1, _omi(e), cons)


def phi_I(e: InvSeq) -> FPath:
    """Delete the rightmost maximum, recording (max drop, maxid drop)."""
    cur = validate_invseq(e, FAMILY_I)
    steps = []
    while len(cur) > 1:
        m, mi = max_and_maxid(cur)
        nxt = cur[: mi - 1] + cur[mi:]
        m2, mi2 = max_and_maxid(nxt)
        steps.append((m - m2, mi - mi2))
        cur = nxt
    steps.reverse()
    return tuple(steps)


def psi_I(q: FPath) -> InvSeq:
    """Inverse of :func:`phi_I`: insert a fresh maximum per step."""
    cur: InvSeq = (0,)
    for a, b in q:
        m, mi = max_and_maxid(cur)
        value = m + a
        pos = mi + b
        assert 1 <= pos <= len(cur) + 1 and value <= pos - 1
        cur = cur[: pos - 1] + (value,) + cur[pos - 1:]
    return cur


def dsum_I(e: InvSeq, f: InvSeq) -> InvSeq:
    """Splice f (shifted by max(e)) right after e's rightmost maximum."""
    m, mi = max_and_maxid(e)
    shifted = tuple(v + m for v in f)
    return e[:mi] + shifted + e[mi:]


def decompose_I(g: InvSeq) -> list[InvSeq]:
    """Peel connected right summands; inverse of folding :func:`dsum_I`.

    A sequence is connected (a single summand) iff maxid = max + 1.
    Otherwise the last summand starts right after the unique position k
    realizing the height deficit and runs while entries stay >= g_{k+1}.
    """
    parts: list[InvSeq] = []
    cur = g
    while True:
        m, mi = max_and_maxid(cur)
        if mi - m == 1:
            break
        deficit = mi - m - 1
        k = max(i for i in range(1, len(cur) + 1) if i - cur[i - 1] == deficit)
        base = cur[k]
        j = k + 1
        while j < len(cur) and cur[j] >= base:
            j += 1
        f = tuple(v - base for v in cur[k: j])
        parts.append(f)
        cur = cur[:k] + cur[j:]
    parts.append(cur)
    parts.reverse()
    return parts


# ---------------------------------------------------------------- family J


def _leading_zeros(e: InvSeq) -> int:
    n = 0
    for v in e:
        if v != 0:
            break
        n += 1
    return n


def stats_J(e: InvSeq) -> StatTriple:
    """(first - 1, omi, single) for a nonempty J-avoider."""
    first = _leading_zeros(e)
    counts: dict[int, int] = {}
    for v in e:
        if v > 0:
            counts[v] = counts.get(v, 0) + 1
    single = sum(1 for c in counts.values() if c == 1)
    return StatTriple(first - 1, _omi(e), single)


def _parse_run_form(e: InvSeq) -> tuple[int, list[tuple[int, int, int]]]:
    """Split e as 0^{i_0} k_1^{j_1} 0^{...} ... with strictly increasing
    positive run values; returns (i_0, [(value, j, zeros_after), ...])."""
    i0 = _leading_zeros(e)
    runs: list[tuple[int, int, int]] = []
    pos = i0
    prev_val = 0
    while pos < len(e):
        v = e[pos]
        if v <= prev_val:
            raise FormViolation(
                f"run values must increase strictly, got {v} after {prev_val}"
            )
        j = 0
        while pos < len(e) and e[pos] == v:
            j += 1
            pos += 1
        zeros = 0
        while pos < len(e) and e[pos] == 0:
            zeros += 1
            pos += 1
        runs.append((v, j, zeros))
        prev_val = v
    return i0, runs


def phi_J(e: InvSeq) -> FPath:
    """Read the run form: value k with j copies and i zeros after it
    becomes step number n-k+1 = (j, 1-i); absent values give (0, 1)."""
    e = validate_invseq(e, FAMILY_J)
    n = len(e) - 1
    i0, runs = _parse_run_form(e)
    steps = [(0, 1)] * n
    for value, j, zeros in runs:
        steps[n - value] = (j, 1 - zeros)
    return tuple(steps)


def psi_J(q: FPath) -> InvSeq:
    """Inverse of :func:`phi_J`."""
    n = len(q)
    out = [0] * (fpath_height(q) + 1)
    for k in range(1, n + 1):
        a, b = q[n - k]
        out.extend([k] * a)
        out.extend([0] * (1 - b))
    return tuple(out)


def dsum_J(e: InvSeq, f: InvSeq) -> InvSeq:
    """Insert f after e's leading zeros, shifting e's positive tail."""
    first = _leading_zeros(e)
    m = len(f)
    tail = tuple(v + m if v > 0 else 0 for v in e[first:])
    return e[:first] + tuple(f) + tail


def decompose_J(g: InvSeq) -> list[InvSeq]:
    """Peel right summands; inverse of folding :func:`dsum_J`.

    Connected means first = 1.  Otherwise the last summand occupies
    positions r..r+m-1 where r = first and m is the smallest positive
    integer with g_{r+m} >= m+1 (no such m: the summand runs to the end).
    """
    parts: list[InvSeq] = []
    cur = g
    while _leading_zeros(cur) > 1:
        r = _leading_zeros(cur)
        n = len(cur)
        m = n - r + 1
        for cand in range(1, n - r + 1):
            if cur[r + cand - 1] >= cand + 1:
                m = cand
                break
        f = cur[r - 1: r - 1 + m]
        rest = tuple(v - m if v > 0 else 0 for v in cur[r - 1 + m:])
        parts.append(f)
        cur = cur[: r - 1] + rest
    parts.append(cur)
    parts.reverse()
    return parts


# -------------------------------------------------------------- generation


def _creates_pattern(prefix: list[int], v: int, patterns) -> bool:
    """Would appending v to prefix complete one of the (length-3) patterns?"""
    L = len(prefix)
    for pat in patterns:
        for i in range(L):
            for j in range(i + 1, L):
                if word_reduction((prefix[i], prefix[j], v)) == pat:
                    return True
    return False


def gen_invseq(n: int, family: str | None, guard: int = 10) -> tuple[InvSeq, ...]:
    """All avoiders of length n for the family, lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n - 1 > guard:
        raise GuardExceeded(n - 1, guard)
    patterns = _PATTERNS[family] if family is not None else ()
    out: list[InvSeq] = []

    def rec(prefix: list[int]) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(0, len(prefix) + 1):
            if not _creates_pattern(prefix, v, patterns):
                prefix.append(v)
                rec(prefix)
                prefix.pop()

    rec([])
    return tuple(out)


if __name__ == "__main__":
    for e in gen_invseq(3, FAMILY_I):
        print(e, phi_I(e))
