import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from syzstab import Family  # noqa: E402

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

EX_STABLE = Family.of([(4, 0, 0), (0, 4, 0), (0, 0, 4), (2, 1, 1)])
EX_UNSTABLE = Family.of([(4, 0, 0), (0, 4, 0), (0, 0, 4), (3, 1, 0)])
EX_SEMISTABLE = Family.of([(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1)])


def monomial_st(vars, max_deg=6):
    return st.lists(st.integers(0, max_deg), min_size=vars, max_size=vars).map(tuple)


@st.composite
def family_st(draw, max_vars=4, max_n=9, max_deg=6, mixed=None):
    """An m-primary family: one pure power per variable plus random extras."""
    vars = draw(st.integers(2, max_vars))
    is_mixed = draw(st.booleans()) if mixed is None else mixed
    d = draw(st.integers(1, max_deg))

    def deg():
        return draw(st.integers(1, max_deg)) if is_mixed else d

    mons = set()
    for i in range(vars):
        e = [0] * vars
        e[i] = deg()
        mons.add(tuple(e))
    extra = draw(st.integers(0, max_n - vars))
    for _ in range(extra):
        dd = deg()
        cuts = sorted(draw(st.lists(st.integers(0, dd), min_size=vars - 1, max_size=vars - 1)))
        e = [b - a for a, b in zip([0] + cuts, cuts + [dd])]
        mons.add(tuple(e))
    return Family(vars, mons)


def random_family(rng: random.Random, max_vars=5, max_n=16, max_deg=8, mixed=None):
    """Seeded generator with the same shape as family_st, for fixed-size batches."""
    vars = rng.randint(2, max_vars)
    is_mixed = rng.random() < 0.5 if mixed is None else mixed
    d = rng.randint(1, max_deg)

    def deg():
        return rng.randint(1, max_deg) if is_mixed else d

    mons = set()
    for i in range(vars):
        e = [0] * vars
        e[i] = deg()
        mons.add(tuple(e))
    n = rng.randint(max(vars, 2), max_n)
    tries = 0
    while len(mons) < n and tries < 500:
        tries += 1
        dd = deg()
        e = [0] * vars
        for _ in range(dd):
            e[rng.randrange(vars)] += 1
        mons.add(tuple(e))
    return Family(vars, mons)


_ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record a criterion outcome: acceptance(number, title, passed, detail)."""

    def record(num, title, passed, detail=""):
        _ACCEPTANCE[num] = (title, passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        title, passed, detail = _ACCEPTANCE[num]
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] {num}. {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
