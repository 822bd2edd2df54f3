import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from oracle import slope_verdict
from syzstab.criterion import (
    Verdict,
    agree,
    classify,
    classify_bruteforce,
    margin,
    saturate,
)
from syzstab.errors import NotMPrimaryError, OracleLimitError, SubsetError
from syzstab.monomials import Family, gcd_all

from conftest import EX_SEMISTABLE, EX_STABLE, EX_UNSTABLE, family_st, random_family


def test_margin_examples():
    assert margin(EX_STABLE, [(4, 0, 0), (2, 1, 1)]) == 2
    assert margin(EX_UNSTABLE, [(4, 0, 0), (3, 1, 0)]) == -1
    assert margin(EX_SEMISTABLE, [(2, 0, 0), (1, 1, 0), (1, 0, 1)]) == 0


def test_margin_errors():
    with pytest.raises(SubsetError):
        margin(EX_STABLE, [(4, 0, 0)])
    with pytest.raises(SubsetError):
        margin(EX_STABLE, [(4, 0, 0), (3, 1, 0)])
    with pytest.raises(SubsetError):
        margin(EX_STABLE, [(4, 0, 0), (4, 0, 0)])


def test_saturate_examples():
    s = saturate(EX_SEMISTABLE, (1, 0, 0))
    assert set(s.members) == {(2, 0, 0), (1, 1, 0), (1, 0, 1)}
    assert s.gcd == (1, 0, 0)
    s = saturate(EX_STABLE, (2, 1, 1))
    assert s.members == ((2, 1, 1),)
    assert saturate(EX_STABLE, (1, 1, 1)).members == ((2, 1, 1),)
    assert saturate(EX_STABLE, (5, 0, 0)).members == ()
    with pytest.raises(SubsetError):
        saturate(EX_STABLE, (0, 0, 0))


def test_canonical_examples():
    assert classify(EX_STABLE).verdict is Verdict.STABLE
    assert classify(EX_STABLE).min_margin == 2

    c = classify(EX_UNSTABLE)
    assert c.verdict is Verdict.UNSTABLE
    assert c.violating_witness.divisor == (3, 0, 0)
    assert c.violating_witness.margin == -1

    c = classify(EX_SEMISTABLE)
    assert c.verdict is Verdict.STRICTLY_SEMISTABLE
    assert [w.divisor for w in c.all_zero_margin_witnesses] == [(1, 0, 0)]
    assert c.worst_witness.margin == 0
    assert c.violating_witness is None


@pytest.mark.parametrize("d", range(1, 9))
def test_three_pure_powers_stable(d):
    assert classify(Family.of([(d, 0, 0), (0, d, 0), (0, 0, d)])).verdict is Verdict.STABLE


def test_line_equal_steps_semistable():
    assert classify(Family.of([(6, 0), (3, 3), (0, 6)])).verdict is Verdict.STRICTLY_SEMISTABLE


def test_variables_stable():
    f = Family.of([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    c = classify(f)
    assert c.verdict is Verdict.STABLE
    assert c.worst_witness is None
    assert classify_bruteforce(f).verdict is Verdict.STABLE


def test_mixed_degree_coprime_pair_destabilises():
    # frozen from the slope oracle: {X0, X1} has gcd 1 and margin -8
    f = Family.of([(1, 0, 0), (0, 1, 0), (0, 0, 10)])
    assert slope_verdict(list(f)) == ("Unstable", -8)
    c = classify(f)
    assert c.verdict is Verdict.UNSTABLE and c.min_margin == -8
    assert c.worst_witness.d_J == 0
    assert set(c.worst_witness.members) == {(1, 0, 0), (0, 1, 0)}


def test_mixed_degree_frozen():
    f = Family.of([(3, 0), (1, 2), (0, 3)])
    c = classify(f)
    assert (c.verdict, c.min_margin) == (Verdict.UNSTABLE, -1)
    assert c.worst_witness.divisor == (0, 2)


def test_input_errors():
    with pytest.raises(NotMPrimaryError):
        classify(Family.of([(1, 1, 0), (0, 1, 1), (1, 0, 1)]))
    with pytest.raises(SubsetError):
        classify(Family.of([(2, 0)]))
    with pytest.raises(SubsetError):
        classify(Family.of([(0, 0), (1, 0), (0, 1)]))


def test_oracle_limit():
    f = Family.of([(5 - i, i) for i in range(6)])
    classify_bruteforce(f, limit=6)
    with pytest.raises(OracleLimitError):
        classify_bruteforce(f, limit=5)


def test_oracle_agrees_on_examples():
    for f in (EX_STABLE, EX_UNSTABLE, EX_SEMISTABLE):
        assert agree(classify(f), classify_bruteforce(f))


def test_witness_tie_break_is_canonical():
    # the two zero-margin divisors X0^3 and X1^3 tie; X0^3 comes first
    c = classify(Family.of([(6, 0), (3, 3), (0, 6)]))
    assert [w.divisor for w in c.all_zero_margin_witnesses] == [(3, 0), (0, 3)]
    assert c.worst_witness.divisor == (3, 0)


@given(family_st(max_n=9))
def test_matches_slope_oracle(f):
    c = classify(f)
    assert (c.verdict.value, c.min_margin) == slope_verdict(list(f))


@given(family_st(max_n=9))
def test_matches_bruteforce(f):
    a, b = classify(f), classify_bruteforce(f)
    assert agree(a, b)
    assert a.worst_witness == b.worst_witness


@given(family_st(max_n=8, max_deg=4))
def test_full_enumeration_agrees(f):
    assert agree(classify(f), classify(f, full_enumeration=True))


@given(family_st(max_n=8, mixed=False))
def test_saturation_monotone_equal_degree(f):
    for k in range(2, len(f)):
        for J in combinations(f.monomials, k):
            g = gcd_all(J)
            if sum(g) == 0:
                continue
            sat = saturate(f, g).members
            if len(sat) < len(f):
                assert margin(f, sat) <= margin(f, J)


@given(family_st(max_n=8, mixed=False))
def test_margin_identity_equal_degree(f):
    n, d = len(f), f.degree
    for k in range(2, len(f) + 1):
        for J in combinations(f.monomials, k):
            d_j = sum(gcd_all(J))
            assert margin(f, J) == (d - d_j) * n + d_j - d * k


@given(family_st(max_n=8))
def test_whole_family_margin_zero(f):
    if sum(gcd_all(f.monomials)) == 0:
        assert margin(f, f.monomials) == 0


@given(family_st(max_vars=4, max_n=8), st.data())
def test_permutation_invariance(f, data):
    perm = data.draw(st.permutations(range(f.vars)))
    a, b = classify(f), classify(f.permuted(perm))
    assert a.verdict == b.verdict and a.min_margin == b.min_margin
    if a.worst_witness is not None:
        mapped = Family(f.vars, a.worst_witness.members).permuted(perm)
        assert margin(f.permuted(perm), mapped.monomials) == b.min_margin


@given(family_st(max_n=9, mixed=False))
def test_equal_degree_witnesses_have_positive_gcd(f):
    c = classify(f)
    for w in (c.worst_witness, *c.all_zero_margin_witnesses):
        if w is not None:
            assert 0 < w.d_J < f.degree
            assert w.k >= 2
            assert all(all(x <= y for x, y in zip(w.divisor, m)) for m in w.members)


@given(family_st(max_n=9))
def test_witness_margin_recomputes(f):
    c = classify(f)
    w = c.worst_witness
    if w is not None:
        assert margin(f, w.members) == w.margin
        assert sum(gcd_all(w.members)) == w.d_J


def test_deterministic_fold():
    rng = random.Random(7)
    for _ in range(50):
        f = random_family(rng, max_n=10)
        g = Family(f.vars, list(reversed(f.monomials)))
        assert classify(f) == classify(g)


def test_permutation_examples_exhaustive():
    for perm in permutations(range(3)):
        assert classify(EX_UNSTABLE.permuted(perm)).verdict is Verdict.UNSTABLE
        assert classify(EX_SEMISTABLE.permuted(perm)).verdict is Verdict.STRICTLY_SEMISTABLE
