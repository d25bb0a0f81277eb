"""Counting formulas against brute-force distributions and pinned tables."""
import math
from collections import Counter

from fpaths.counting import (
    a_joint,
    a_marginal,
    a_total,
    comb0,
    f_refined,
    multinomial,
    sequence,
    series_coeff,
)
from fpaths.fpath_core import fpath_stats, gen_fpaths

SEQUENCE = (1, 2, 6, 21, 80, 322, 1347, 5798, 25512)

TABLE_H = (
    (1,),
    (1, 1),
    (2, 3, 1),
    (5, 9, 6, 1),
    (13, 30, 26, 10, 1),
    (36, 100, 110, 60, 15, 1),
)
TABLE_L = (
    (1,),
    (1, 1),
    (1, 4, 1),
    (1, 9, 10, 1),
    (1, 16, 42, 20, 1),
    (1, 25, 120, 140, 35, 1),
)


def signature(q):
    """(i, j, k, l) step classes plus height, independent of counting.py."""
    i = j = k = l = 0
    h = 0
    for a, b in q:
        h += b - a
        if (a, b) == (0, 1):
            l += 1
        elif a == 1 and b == 1:
            i += 1
        elif a == 1:
            j += 1
        elif b == 1:
            k += 1
    return i, j, k, l, h


# ---------------------------------------------------------- small helpers


def test_comb0_boundaries():
    assert comb0(5, 2) == 10
    assert comb0(5, -1) == 0
    assert comb0(5, 6) == 0
    assert comb0(-1, 0) == 0
    assert comb0(0, 0) == 1


def test_series_coeff_against_convolution():
    # expand 1/(1-x)^s by repeated polynomial multiplication
    for s in range(0, 6):
        coeffs = [1] + [0] * 10
        geom = [1] * 11
        for _ in range(s):
            new = [0] * 11
            for i, c in enumerate(coeffs):
                for j, g in enumerate(geom):
                    if i + j <= 10:
                        new[i + j] += c * g
            coeffs = new
        for t in range(11):
            assert series_coeff(t, s) == coeffs[t], (t, s)
    assert series_coeff(-1, 3) == 0
    assert series_coeff(0, 0) == 1
    assert series_coeff(1, 0) == 0


def test_multinomial_against_factorials():
    assert multinomial(5, (2, 2, 1)) == math.factorial(5) // (2 * 2 * 1)
    assert multinomial(4, (2, 2, 1)) == 0  # wrong total
    assert multinomial(3, (4, -1)) == 0    # negative part
    assert multinomial(0, (0, 0)) == 1
    assert multinomial(7, (3, 2, 2)) == 210


# ------------------------------------------------------------ closed forms


def test_f_refined_pinned_values():
    assert f_refined(2, 1, 0, 0, 1, 1) == 2
    assert f_refined(2, 0, 0, 1, 1, 0) == 1
    for n in range(9):
        assert f_refined(n, 0, 0, 0, n, n) == 1  # the all-north path


def test_f_refined_against_brute_signatures():
    for n in range(7):
        dist = Counter(signature(q) for q in gen_fpaths(n))
        for i in range(n + 1):
            for j in range(n + 1 - i):
                for k in range(n + 1 - i - j):
                    for l in range(n + 1 - i - j - k):
                        for m in range(n + 1):
                            want = dist.get((i, j, k, l, m), 0)
                            assert f_refined(n, i, j, k, l, m) == want


def test_f_refined_sums_to_total():
    for n in range(7):
        total = 0
        for i in range(n + 1):
            for j in range(n + 1 - i):
                for k in range(n + 1 - i - j):
                    for l in range(n + 1 - i - j - k):
                        for m in range(n + 1):
                            total += f_refined(n, i, j, k, l, m)
        assert total == a_total(n)


def test_a_joint_against_brute():
    for n in range(6):
        dist = Counter(fpath_stats(q)[0] for q in gen_fpaths(n))
        for m in range(n + 1):          # height
            for l in range(n + 1):      # north
                for h in range(n + 1):  # aone
                    want = dist.get((m, l, h), 0)
                    assert a_joint(n, h=h, l=l, m=m) == want


def test_a_joint_out_of_range():
    assert a_joint(3, -1, 0, 0) == 0
    assert a_joint(3, 0, 4, 0) == 0
    assert a_joint(3, 0, 0, 5) == 0


# --------------------------------------------------------------- marginals


def test_marginals_against_brute():
    for n in range(6):
        triples = [fpath_stats(q)[0] for q in gen_fpaths(n)]
        for v in range(n + 1):
            assert a_marginal(n, h=v) == sum(1 for t in triples if t.a1 == v)
            assert a_marginal(n, l=v) == sum(1 for t in triples if t.l == v)
            assert a_marginal(n, m=v) == sum(1 for t in triples if t.h == v)
            for w in range(n + 1):
                assert a_marginal(n, h=v, l=w) == sum(
                    1 for t in triples if t.a1 == v and t.l == w
                )
                assert a_marginal(n, h=v, m=w) == sum(
                    1 for t in triples if t.a1 == v and t.h == w
                )
                assert a_marginal(n, l=v, m=w) == sum(
                    1 for t in triples if t.l == v and t.h == w
                )
        assert a_marginal(n) == len(triples)


def test_marginals_against_joint_sums_wide():
    for n in range(0, 13):
        js = {
            (h, l, m): a_joint(n, h, l, m)
            for h in range(n + 1)
            for l in range(n + 1)
            for m in range(n + 1)
        }
        for h in range(n + 1):
            assert a_marginal(n, h=h) == sum(
                js[h, l, m] for l in range(n + 1) for m in range(n + 1)
            )
        for l in range(n + 1):
            assert a_marginal(n, l=l) == sum(
                js[h, l, m] for h in range(n + 1) for m in range(n + 1)
            )
        for m in range(n + 1):
            assert a_marginal(n, m=m) == sum(
                js[h, l, m] for h in range(n + 1) for l in range(n + 1)
            )


def test_marginal_pinned_values():
    assert a_marginal(5, h=2) == 110
    assert a_marginal(5, l=3) == 140
    for n in range(9):
        assert a_marginal(n, l=0) == 1  # the staircase-free bottom row
    # the all-north corner: only the path (0,1)^n
    for n in range(9):
        assert a_joint(n, h=0, l=n, m=n) == 1
        for m in range(n):
            assert a_marginal(n, l=n, m=m) == 0
        assert a_marginal(n, l=n, m=n) == 1


def test_tables():
    for n, row in enumerate(TABLE_H):
        assert tuple(a_marginal(n, h=h) for h in range(n + 1)) == row
    for n, row in enumerate(TABLE_L):
        assert tuple(a_marginal(n, l=l) for l in range(n + 1)) == row
    for n in range(6):
        assert sum(TABLE_H[n]) == SEQUENCE[n]
        assert sum(TABLE_L[n]) == SEQUENCE[n]


def test_sequence():
    assert tuple(sequence(8)) == SEQUENCE
    assert sequence(0) == [1]
    # the closed form stays exact well past the pinned range
    assert all(isinstance(v, int) and v > 0 for v in sequence(30))


def test_total_matches_marginal_sums():
    for n in range(13):
        assert a_total(n) == sum(a_marginal(n, m=m) for m in range(n + 1))
