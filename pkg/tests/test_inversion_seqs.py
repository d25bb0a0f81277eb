"""Inversion sequences avoiding (101,102) and (101,021).

The avoidance oracle spells out each pattern as explicit triple
comparisons - no shared code with the production reduction matcher.
"""
import itertools

import pytest

from fpaths.errors import FormViolation, GuardExceeded, NotAvoider
from fpaths.fpath_core import fpath_stats, gen_fpaths
from fpaths.inversion_seqs import (
    FAMILY_I,
    FAMILY_J,
    decompose_I,
    decompose_J,
    dsum_I,
    dsum_J,
    gen_invseq,
    invseq_contains,
    max_and_maxid,
    phi_I,
    phi_J,
    psi_I,
    psi_J,
    stats_I,
    stats_J,
    validate_invseq,
    word_reduction,
)

SIX_FPATHS = (
    ((0, 1), (1, 0)),
    ((0, 1), (2, 1)),
    ((1, 1), (1, 1)),
    ((0, 1), (1, 1)),
    ((1, 1), (0, 1)),
    ((0, 1), (0, 1)),
)
SIX_I = ((0, 1, 0), (0, 0, 2), (0, 1, 2), (0, 0, 1), (0, 1, 1), (0, 0, 0))
SIX_J = ((0, 1, 0), (0, 1, 1), (0, 1, 2), (0, 0, 1), (0, 0, 2), (0, 0, 0))


def oracle_has_101(e):
    n = len(e)
    return any(
        e[i] == e[k] and e[j] < e[i]
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def oracle_has_102(e):
    n = len(e)
    return any(
        e[j] < e[i] < e[k]
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def oracle_has_021(e):
    n = len(e)
    return any(
        e[i] < e[k] < e[j]
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def oracle_invseqs(length, family):
    ranges = [range(i) for i in range(1, length + 1)]
    for e in itertools.product(*ranges):
        if family == FAMILY_I:
            if not oracle_has_101(e) and not oracle_has_102(e):
                yield e
        else:
            if not oracle_has_101(e) and not oracle_has_021(e):
                yield e


# ---------------------------------------------------------------- plumbing


def test_word_reduction():
    assert word_reduction((5, 2, 5)) == (1, 0, 1)
    assert word_reduction((3, 1, 7)) == (1, 0, 2)
    assert word_reduction((0, 4, 2)) == (0, 2, 1)
    assert word_reduction(()) == ()
    assert word_reduction((2, 2, 2)) == (0, 0, 0)


def test_contains_against_oracle():
    for length in range(7):
        ranges = [range(i) for i in range(1, length + 1)]
        for e in itertools.product(*ranges):
            assert invseq_contains(e, (1, 0, 1)) == oracle_has_101(e)
            assert invseq_contains(e, (1, 0, 2)) == oracle_has_102(e)
            assert invseq_contains(e, (0, 2, 1)) == oracle_has_021(e)


def test_validate():
    assert validate_invseq((0, 1, 0)) == (0, 1, 0)
    with pytest.raises(FormViolation):
        validate_invseq((0, 2, 0))  # entry 2 needs position >= 3
    with pytest.raises(FormViolation):
        validate_invseq((1,))
    with pytest.raises(NotAvoider):
        validate_invseq((0, 1, 0, 1), FAMILY_I)
    with pytest.raises(NotAvoider):
        validate_invseq((0, 1, 0, 1), FAMILY_J)
    # (0,0,1,3,2) is fine for I but contains 021 for J
    validate_invseq((0, 0, 1, 3, 2), FAMILY_I)
    with pytest.raises(NotAvoider):
        validate_invseq((0, 0, 1, 3, 2), FAMILY_J)


def test_max_and_maxid_rightmost():
    assert max_and_maxid((0, 1, 1, 0)) == (1, 3)
    assert max_and_maxid((0,)) == (0, 1)
    assert max_and_maxid((0, 0)) == (0, 2)


def test_gen_counts_and_oracle():
    expected = (1, 2, 6, 21, 80)
    for k, want in enumerate(expected):
        length = k + 1
        for family in (FAMILY_I, FAMILY_J):
            got = gen_invseq(length, family)
            assert len(got) == want
            assert list(got) == sorted(oracle_invseqs(length, family))
    assert gen_invseq(3, FAMILY_I) == tuple(sorted(SIX_I))
    assert gen_invseq(3, FAMILY_J) == tuple(sorted(SIX_J))


def test_gen_untagged_is_all_inversion_sequences():
    import math

    for length in range(1, 6):
        assert len(gen_invseq(length, None)) == math.factorial(length)


def test_guard():
    with pytest.raises(GuardExceeded):
        gen_invseq(6, FAMILY_I, guard=4)


# ------------------------------------------------------------- statistics


def test_stats_I_six():
    expected = [(0, 1, 1), (0, 1, 0), (0, 0, 2), (1, 1, 1), (1, 1, 1), (2, 2, 0)]
    for e, st in zip(SIX_I, expected):
        assert tuple(stats_I(e)) == st, e


def test_stats_J_six():
    expected = [(0, 1, 1), (0, 1, 0), (0, 0, 2), (1, 1, 1), (1, 1, 1), (2, 2, 0)]
    for e, st in zip(SIX_J, expected):
        assert tuple(stats_J(e)) == st, e


def test_stats_transport():
    for n in range(5):
        for e in gen_invseq(n + 1, FAMILY_I):
            assert stats_I(e) == fpath_stats(phi_I(e))[0]
        for e in gen_invseq(n + 1, FAMILY_J):
            assert stats_J(e) == fpath_stats(phi_J(e))[0]


def test_stats_J_pinned_component():
    assert tuple(stats_J((0, 1, 1, 1, 0, 0))) == (0, 4, 0)


# --------------------------------------------------------------- bijection


def test_six_object_tables():
    for e, q in zip(SIX_I, SIX_FPATHS):
        assert phi_I(e) == q, e
        assert psi_I(q) == e
    for e, q in zip(SIX_J, SIX_FPATHS):
        assert phi_J(e) == q, e
        assert psi_J(q) == e


def test_round_trip_small():
    for n in range(5):
        for e in gen_invseq(n + 1, FAMILY_I):
            assert psi_I(phi_I(e)) == e
        for e in gen_invseq(n + 1, FAMILY_J):
            assert psi_J(phi_J(e)) == e
        for q in gen_fpaths(n):
            assert phi_I(psi_I(q)) == q
            assert phi_J(psi_J(q)) == q


def test_phi_rejects_non_avoiders():
    with pytest.raises(NotAvoider):
        phi_I((0, 1, 0, 1))
    with pytest.raises(NotAvoider):
        phi_J((0, 0, 1, 3, 2))


def test_pinned_images():
    from fpaths.verify_harness import PINNED_IMAGES, PINNED_Q

    want_i = tuple(int(v) for v in PINNED_IMAGES["inv-i"].split(","))
    want_j = tuple(int(v) for v in PINNED_IMAGES["inv-j"].split(","))
    assert psi_I(PINNED_Q) == want_i
    assert phi_I(want_i) == PINNED_Q
    assert psi_J(PINNED_Q) == want_j
    assert phi_J(want_j) == PINNED_Q


# -------------------------------------------------------------- direct sums

CHAIN_I = ((0,), (0,), (0, 0, 0, 3, 0, 0), (0,), (0, 0, 1, 3, 4, 3, 3))
CHAIN_J = ((0,), (0,), (0, 1, 1, 1, 0, 0), (0,), (0, 1, 0, 0, 4, 4, 5))


def test_pinned_chains():
    import functools

    from fpaths.verify_harness import PINNED_IMAGES

    want_i = tuple(int(v) for v in PINNED_IMAGES["inv-i"].split(","))
    want_j = tuple(int(v) for v in PINNED_IMAGES["inv-j"].split(","))
    assert functools.reduce(dsum_I, CHAIN_I) == want_i
    assert functools.reduce(dsum_J, CHAIN_J) == want_j
    assert decompose_I(want_i) == list(CHAIN_I)
    assert decompose_J(want_j) == list(CHAIN_J)


def test_decompose_j_fallback_summand_reaches_the_end():
    # the 011100 block admits no index with g_{r+m} >= m+1, so the first
    # peeled summand runs to the end of the sequence
    g = dsum_J((0, 0), (0, 1, 1, 1, 0, 0))
    assert g == (0, 0, 0, 1, 1, 1, 0, 0)
    assert decompose_J(g) == [(0,), (0,), (0, 1, 1, 1, 0, 0)]


def test_decompose_matches_fpath_components():
    """decompose agrees with the transported F-path decomposition."""
    import functools

    from fpaths.fpath_core import fpath_decompose

    for n in range(6):
        for e in gen_invseq(n + 1, FAMILY_I):
            parts = decompose_I(e)
            assert functools.reduce(dsum_I, parts) == e
            assert parts == [psi_I(r) for r in fpath_decompose(phi_I(e))]
        for e in gen_invseq(n + 1, FAMILY_J):
            parts = decompose_J(e)
            assert functools.reduce(dsum_J, parts) == e
            assert parts == [psi_J(r) for r in fpath_decompose(phi_J(e))]
