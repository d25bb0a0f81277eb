"""Permutations avoiding 2341, 2431 and 3241, and their F-path bijection.

Permutations are tuples of 1..N.  The class avoiding the three patterns
is closed under removing the maximum's "shape surgery" below, and a
permutation of length n+1 maps to an F-path of length n.

Statistics matched to F-paths:

    block - 1   plus-indecomposable blocks, minus 1        = height
    asc         adjacent ascents pi(i) < pi(i+1)           = north
    crit        "critical" indexes (see :func:`crit`),     = aone + asc + 1
                so aone = crit - asc - 1

Shape of a permutation pi of length N (with the sentinel pi(0) = 0):

    x = position of the maximum N
    z = largest value left of x   (0 if x = 1)
    y = position of z             (0 if z = 0)
    w = smallest value at or right of x

Avoiders always have z != w, giving four cases by (z == N-1?) and
(z > w?); each case removes the maximum by a different value surgery and
emits one F-step.  :func:`shape_analysis` exposes (x, y, z, w, case).
"""
from __future__ import annotations

from itertools import permutations as _sym
from typing import Iterable, NamedTuple

from .errors import GuardExceeded, NotAvoider
from .fpath_core import FPath, StatTriple

Permutation = tuple[int, ...]

FORBIDDEN = ((2, 3, 4, 1), (2, 4, 3, 1), (3, 2, 4, 1))

Z_EQ_LT = "Z_EQ_LT"   # z = N-1, z < w   (max at the last position)
Z_LT_LT = "Z_LT_LT"   # z < N-1, z < w
Z_EQ_GT = "Z_EQ_GT"   # z = N-1, z > w
Z_LT_GT = "Z_LT_GT"   # z < N-1, z > w


class ShapeData(NamedTuple):
    x: int
    y: int
    z: int
    w: int
    case: str


# ------------------------------------------------------ pattern machinery


def perm_contains(p: Permutation, pattern: Permutation) -> bool:
    """Classical containment: some subsequence of p is order-isomorphic
    to ``pattern``.  Backtracking over positions with pairwise checks."""
    k = len(pattern)
    n = len(p)
    if k == 0:
        return True

    def extend(chosen: list[int], start: int) -> bool:
        t = len(chosen)
        if t == k:
            return True
        for idx in range(start, n - (k - t) + 1):
            v = p[idx]
            ok = True
            for s in range(t):
                if (pattern[s] < pattern[t]) != (p[chosen[s]] < v):
                    ok = False
                    break
            if ok:
                chosen.append(idx)
                if extend(chosen, idx + 1):
                    return True
                chosen.pop()
        return False

    return extend([], 0)


def is_avoider(p: Permutation) -> bool:
    return not any(perm_contains(p, f) for f in FORBIDDEN)


def validate_avoider(p: Permutation) -> Permutation:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    for f in FORBIDDEN:
        if perm_contains(p, f):
            raise NotAvoider(f)
    return p


def gen_avoiders(n: int, guard: int = 9) -> tuple[Permutation, ...]:
    """All avoiders of length n in lexicographic order (filters n!)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > guard:
        raise GuardExceeded(n, guard)
    return tuple(p for p in _sym(range(1, n + 1)) if is_avoider(p))


# ---------------------------------------------------- blocks & statistics


def block_decompose(p: Permutation) -> list[Permutation]:
    """Split at every prefix that is a sub-permutation {1..i} (the
    plus-indecomposable blocks, each reduced to its own values)."""
    blocks = []
    start = 0
    run_max = 0
    for idx, v in enumerate(p, 1):
        if v > run_max:
            run_max = v
        if run_max == idx:
            blocks.append(tuple(x - start for x in p[start:idx]))
            start = idx
    return blocks


def block_count(p: Permutation) -> int:
    count = 0
    run_max = 0
    for idx, v in enumerate(p, 1):
        if v > run_max:
            run_max = v
        if run_max == idx:
            count += 1
    return count


def asc(p: Permutation) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] < p[i + 1])


def crit(p: Permutation) -> int:
    """Indexes i where every pair j < i < k with pi(j), pi(k) < pi(i)
    appears in increasing order (pi(j) < pi(k)).

    >>> crit((2, 4, 1, 3))
    3
    """
    n = len(p)
    count = 0
    for i in range(n):
        good = True
        for j in range(i):
            if p[j] >= p[i]:
                continue
            for k in range(i + 1, n):
                if p[k] < p[i] and p[j] > p[k]:
                    good = False
                    break
            if not good:
                break
        if good:
            count += 1
    return count


def perm_stats(p: Permutation) -> StatTriple:
    """(block - 1, asc, crit - asc - 1) for a nonempty avoider."""
    a = asc(p)
    return StatTriple(block_count(p) - 1, a, crit(p) - a - 1)


def perm_direct_sum(p1: Permutation, p2: Permutation) -> Permutation:
    return tuple(p1) + tuple(v + len(p1) for v in p2)


# ------------------------------------------------------------------ shape


def shape_analysis(p: Permutation) -> ShapeData:
    """Compute (x, y, z, w, case) for an avoider of length >= 2.

    The four per-case value-interval facts that the surgeries rely on
    are asserted here, so a corrupted input fails loudly in debug runs.
    """
    n1 = len(p)  # N = n + 1
    n = n1 - 1
    x = p.index(n1) + 1
    z = max(p[: x - 1], default=0)
    y = p.index(z) + 1 if z else 0
    w = min(p[x - 1:])
    assert z != w
    prefix_rest = {p[i] for i in range(x - 1) if i + 1 != y}
    if z == n:
        if z < w:
            case = Z_EQ_LT
            assert x == n1 and w == n1
            assert prefix_rest == set(range(1, n))
        else:
            case = Z_EQ_GT
            assert 2 <= x <= n and w == x - 1
            assert prefix_rest == set(range(1, x - 1))
            assert {p[i] for i in range(x, n1)} == set(range(x - 1, n))
    else:
        if z < w:
            case = Z_LT_LT
            assert 1 <= x <= n and z == x - 1 and w == x
            assert prefix_rest == set(range(1, x - 1))
            assert {p[i] for i in range(x, n1)} == set(range(x, n1))
        else:
            case = Z_LT_GT
            assert 2 <= x <= n - 1 and x - 1 < z < n and w == x - 1
            assert prefix_rest == set(range(1, x - 1))
            assert {p[i] for i in range(x, z + 1)} == set(range(x - 1, z))
            assert {p[i] for i in range(z + 1, n1)} == set(range(z + 1, n1))
    return ShapeData(x, y, z, w, case)


# -------------------------------------------------------------- bijection


def _reduce(vals: Iterable[int]) -> Permutation:
    vals = tuple(vals)
    order = sorted(vals)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in vals)


def phi_S(p: Permutation) -> FPath:
    """Map an avoider of length n+1 to its F-path of length n.

    Each iteration removes the maximum with the surgery of the current
    shape case and prepends one step; see :func:`psi_S` for the inverse.
    """
    cur = validate_avoider(p)
    steps: list[tuple[int, int]] = []
    while len(cur) >= 2:
        sh = shape_analysis(cur)
        x = sh.x
        if sh.case == Z_EQ_LT:
            steps.append((0, 1))
            cur = cur[:-1]
        elif sh.case == Z_LT_LT:
            tau = _reduce(cur[x:])
            steps.append((1, 2 - block_count(tau)))
            cur = cur[: x - 1] + cur[x:]
        elif sh.case == Z_EQ_GT:
            head = tuple(
                x - 1 if i + 1 == sh.y else cur[i] for i in range(x - 1)
            )
            tail = tuple(v + 1 for v in cur[x:])
            omega = _reduce(tail)
            steps.append((1 + block_count(omega), 1))
            cur = head + tail
        else:  # Z_LT_GT
            z = sh.z
            head = tuple(
                x - 1 if i + 1 == sh.y else cur[i] for i in range(x - 1)
            )
            mid = tuple(v + 1 for v in cur[x: z + 1])
            tail = cur[z + 1:]
            omega = _reduce(mid)
            tau = _reduce(tail)
            steps.append((1 + block_count(omega), 1 - block_count(tau)))
            cur = head + mid + tail
    steps.reverse()
    return tuple(steps)


def psi_S(q: FPath) -> Permutation:
    """Inverse of :func:`phi_S`: grow from (1,) one step at a time.

    For a step (a, b) on a current permutation of length L the new
    maximum L+1 goes to position x, determined by cutting blocks off the
    right: tau = the last (1-b)+1 blocks when b <= 0 drops by renaming,
    omega = the (a-1) blocks before them when a >= 2.
    """
    cur: Permutation = (1,)
    for a, b in q:
        L = len(cur)
        if a == 0:
            cur = cur + (L + 1,)
            continue
        blocks = block_decompose(cur)
        c = len(blocks)
        if a == 1:
            nt = 2 - b
            assert c >= nt
            tlen = sum(len(t) for t in blocks[c - nt:])
            x = L - tlen + 1
            cur = cur[: x - 1] + (L + 1,) + cur[x - 1:]
        elif b == 1:
            nw = a - 1
            assert c >= nw + 1
            wlen = sum(len(t) for t in blocks[c - nw:])
            x = L - wlen + 1
            y = cur.index(x - 1) + 1
            head = tuple(L if i + 1 == y else cur[i] for i in range(x - 1))
            tail = tuple(v - 1 for v in cur[x - 1:])
            cur = head + (L + 1,) + tail
        else:
            nt = 1 - b
            nw = a - 1
            assert c >= nt + nw + 1
            tlen = sum(len(t) for t in blocks[c - nt:])
            wlen = sum(len(t) for t in blocks[c - nt - nw: c - nt])
            x = L - tlen - wlen + 1
            z = x - 1 + wlen
            y = cur.index(x - 1) + 1
            head = tuple(z if i + 1 == y else cur[i] for i in range(x - 1))
            mid = tuple(v - 1 for v in cur[x - 1: x - 1 + wlen])
            tail = cur[x - 1 + wlen:]
            cur = head + (L + 1,) + mid + tail
    return cur


if __name__ == "__main__":
    for p in gen_avoiders(3):
        print(p, phi_S(p))
