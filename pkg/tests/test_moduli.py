from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from syzstab.errors import ExcludedTripleError, NotMPrimaryError, ParameterRangeError
from syzstab.moduli import chern_classes, moduli_report, slope
from syzstab.monomials import Family

from conftest import EX_STABLE, family_st


def test_five_quartics_hand_values():
    # 5*15 - 25, 5*15 + 5*3 - 25, 5*C(3,2)
    r = moduli_report(2, 4, 5)
    assert (r.dim_stratum, r.dim_component, r.codim) == (50, 65, 15)
    assert r.rank == 4
    assert r.h_E == (0, 1, 15, 0)
    assert r.h_Ed == (0, 10, 0, 0)
    assert r.ext1 == 65 and r.ext2 == 0


def test_slope_of_four_quartics():
    assert moduli_report(2, 4, 4).slope == Fraction(-16, 3)
    assert slope(EX_STABLE) == Fraction(-16, 3)


def test_excluded_triple():
    r = moduli_report(2, 2, 5)
    assert r.chern[0] == -10
    assert r.rank == 4
    assert r.to_dict()["excluded"] is True
    for attr in ("dim_stratum", "codim", "dim_component", "ext1", "ext2", "h_E", "h_Ed"):
        with pytest.raises(ExcludedTripleError):
            getattr(r, attr)


def test_space_codim_zero():
    for d in range(1, 7):
        for n in (4, comb(d + 3, 3)):
            r = moduli_report(3, d, n)
            assert r.codim == 0 and r.dim_component == r.dim_stratum == n * comb(d + 3, 3) - n * n
            assert r.ext2 == n * comb(d - 1, 3)


def test_chern_truncated():
    assert chern_classes(2, 3, 4) == (-12, 54)
    assert len(moduli_report(4, 2, 6).chern) == 4


def test_range_errors():
    for t in ((1, 3, 2), (2, 0, 3), (2, 2, 2), (2, 2, 7)):
        with pytest.raises(ParameterRangeError):
            moduli_report(*t)


def test_slope_of_variables():
    for N in range(1, 6):
        f = Family(N + 1, [tuple(int(i == j) for j in range(N + 1)) for i in range(N + 1)])
        assert slope(f) == Fraction(-(N + 1), N)


def test_slope_errors():
    with pytest.raises(NotMPrimaryError):
        slope(Family.of([(1, 1), (0, 2)]))


triples = st.integers(2, 5).flatmap(
    lambda N: st.integers(1, 7).flatmap(
        lambda d: st.tuples(st.just(N), st.just(d), st.integers(N + 1, comb(d + N, N)))
    )
).filter(lambda t: t != (2, 2, 5))


@given(triples)
def test_consistency(t):
    N, d, n = t
    r = moduli_report(N, d, n)
    assert r.dim_component - r.dim_stratum == r.codim
    assert r.chern[0] == -d * n
    assert r.slope * (n - 1) == r.chern[0]
    assert r.chern == tuple(comb(n, i) * (-d) ** i for i in range(1, N + 1))
    assert r.h_Ed[1] >= 0
    if N != 3:
        assert r.ext2 == 0
    else:
        assert r.ext2 == n * comb(d - 1, 3)
    assert r.ext1 == r.dim_component


@given(family_st(mixed=False))
def test_slope_depends_on_d_and_n(f):
    assert slope(f) == Fraction(-f.degree * len(f), len(f) - 1)
