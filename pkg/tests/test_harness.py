from itertools import permutations
from math import comb

import pytest

from syzstab.constructions import admissible_n
from syzstab.criterion import classify
from syzstab.errors import BudgetExceeded
from syzstab.harness import census, jobs_from_env, orbit_canonical_form, sweep, sweep_tasks
from syzstab.monomials import Family


def test_sweep_line():
    rep = sweep([1], range(1, 13))
    assert not rep.failures
    for e in rep.entries:
        assert e["d"] % (e["n"] - 1) == 0
        assert (e["verdict"] == "Stable") == (e["n"] == 2)


def test_sweep_one_entry_per_admissible_triple():
    rep = sweep([2, 3], range(1, 4))
    got = [(e["N"], e["d"], e["n"]) for e in rep.entries]
    want = [(N, d, n) for N in (2, 3) for d in range(1, 4) for n in admissible_n(N, d)]
    assert got == want
    assert rep.summary["entries"] == len(want)
    assert rep.summary["failures"] == 0 and rep.summary["repaired"] == 0
    assert rep.summary["strictly-semistable"] == 1


def test_sweep_budget_partial():
    rep = sweep([2], range(1, 5), budget=5)
    assert rep.partial and len(rep.entries) == 5 and rep.requested == len(sweep_tasks([2], range(1, 5)))
    assert "partial: budget 5" in rep.to_text()
    assert rep.to_dict()["partial"] is True


def test_sweep_text_and_timings():
    rep = sweep([2], [2])
    text = rep.to_text()
    assert text.rstrip().endswith("failures: 0")
    assert "elapsed" not in rep.to_json()
    assert "elapsed" in rep.to_json(timings=True)
    assert "elapsed" in rep.to_text(timings=True)


def test_sweep_parallel_matches_serial():
    a = sweep([2, 3], range(1, 5), jobs=1).to_json()
    b = sweep([2, 3], range(1, 5), jobs=3).to_json()
    assert a == b


def test_jobs_env(monkeypatch):
    monkeypatch.setenv("SYZSTAB_JOBS", "3")
    assert jobs_from_env() == 3
    monkeypatch.setenv("SYZSTAB_JOBS", "junk")
    assert jobs_from_env() == 1
    monkeypatch.delenv("SYZSTAB_JOBS")
    assert jobs_from_env(2) == 2


def test_census_five_quadrics():
    rep = census(2, 2, 5, up_to_symmetry=True)
    assert rep.total_families == 6 and rep.m_primary_count == 3
    assert rep.counts == {"stable": 0, "strictly-semistable": 3, "unstable": 0}
    assert len(rep.orbits) == 1 and rep.orbits[0]["orbit_size"] == 3
    assert "stable: 0, strictly-semistable: 3" in rep.to_text()


def test_census_line():
    rep = census(1, 3, 3)
    assert rep.m_primary_count == 2 and rep.counts["unstable"] == 2
    rep = census(1, 4, 3)
    assert rep.counts["strictly-semistable"] == 1


def test_census_total_formula():
    for N, d, n in ((2, 3, 4), (3, 2, 5), (1, 5, 2)):
        rep = census(N, d, n)
        assert rep.total_families == comb(comb(d + N, N), n)
        assert sum(rep.counts.values()) == rep.m_primary_count


def test_census_limit():
    with pytest.raises(BudgetExceeded):
        census(2, 4, 8, limit=1000)


def test_census_orbits_are_consistent():
    rep = census(2, 3, 5, up_to_symmetry=True)
    assert sum(o["orbit_size"] for o in rep.orbits) == rep.m_primary_count
    for o in rep.orbits:
        f = Family(3, o["form"])
        for perm in permutations(range(3)):
            g = f.permuted(perm)
            assert classify(g).verdict.value == o["verdict"]
            assert orbit_canonical_form(g) == o["form"]
    assert sum(rep.orbit_counts.values()) == len(rep.orbits)
