"""Parameter sweeps over constructed families and exhaustive censuses of small cases."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb

from .constructions import admissible_n, construct_family
from .criterion import Verdict, classify
from .errors import BudgetExceeded, SyzstabError
from .formats import dump_json
from .monomials import Family, enumerate_monomials

CENSUS_LIMIT = 10**7
JOBS_ENV = "SYZSTAB_JOBS"

VERDICT_KEYS = {
    Verdict.STABLE.value: "stable",
    Verdict.STRICTLY_SEMISTABLE.value: "strictly-semistable",
    Verdict.UNSTABLE.value: "unstable",
}


def jobs_from_env(default=1):
    raw = os.environ.get(JOBS_ENV)
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


def sweep_tasks(N_range, d_range):
    return [(N, d, n) for N in N_range for d in d_range for n in admissible_n(N, d)]


def run_entry(task):
    N, d, n = task
    start = time.perf_counter()
    try:
        res = construct_family(N, d, n)
        entry = {
            "N": N,
            "d": d,
            "n": n,
            "recipe": res.recipe,
            "expected": res.expected.value,
            "verdict": res.verdict.value,
            "min_margin": res.verification.min_margin,
            "repaired": res.repaired,
        }
    except SyzstabError as exc:
        entry = {
            "N": N,
            "d": d,
            "n": n,
            "recipe": None,
            "expected": None,
            "verdict": "error",
            "min_margin": None,
            "repaired": False,
            "error": str(exc),
        }
    entry["elapsed"] = time.perf_counter() - start
    return entry


@dataclass
class SweepReport:
    entries: list
    partial: bool = False
    budget: int = None
    requested: int = 0

    @property
    def failures(self):
        return [e for e in self.entries if e["verdict"] != e["expected"]]

    @property
    def summary(self):
        counts = {key: 0 for key in VERDICT_KEYS.values()}
        for e in self.entries:
            key = VERDICT_KEYS.get(e["verdict"])
            if key:
                counts[key] += 1
        counts["entries"] = len(self.entries)
        counts["repaired"] = sum(1 for e in self.entries if e["repaired"])
        counts["failures"] = len(self.failures)
        return counts

    def to_dict(self, timings=False):
        keep = [k for k in ("N", "d", "n", "recipe", "expected", "verdict", "min_margin", "repaired", "error")]
        if timings:
            keep.append("elapsed")
        entries = [{k: e[k] for k in keep if k in e} for e in self.entries]
        return {
            "entries": entries,
            "summary": self.summary,
            "failures": [[e["N"], e["d"], e["n"]] for e in self.failures],
            "partial": self.partial,
            "requested": self.requested,
            "budget": self.budget,
        }

    def to_json(self, timings=False):
        return dump_json(self.to_dict(timings))

    def to_text(self, timings=False):
        head = ["N", "d", "n", "recipe", "verdict", "min_margin", "repaired"]
        if timings:
            head.append("elapsed")
        rows = []
        for e in self.entries:
            row = [str(e["N"]), str(e["d"]), str(e["n"]), str(e["recipe"]), e["verdict"],
                   "-" if e["min_margin"] is None else str(e["min_margin"]), "yes" if e["repaired"] else "no"]
            if timings:
                row.append(f"{e['elapsed']:.4f}")
            rows.append(row)
        lines = format_table(head, rows, right=3)
        s = self.summary
        lines.append(
            f"entries: {s['entries']}, stable: {s['stable']}, strictly-semistable: {s['strictly-semistable']}, "
            f"unstable: {s['unstable']}, repaired: {s['repaired']}"
        )
        if self.partial:
            lines.append(f"partial: budget {self.budget} reached before {self.requested} entries")
        lines.append(f"failures: {s['failures']}")
        return "\n".join(lines) + "\n"


def format_table(head, rows, right=0):
    """Aligned columns; the first `right` columns are right-justified."""
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(head)]

    def fmt(cells):
        out = [c.rjust(w) if i < right else c.ljust(w) for i, (c, w) in enumerate(zip(cells, widths))]
        return "  ".join(out).rstrip()

    return [fmt(head)] + [fmt(r) for r in rows]


def sweep(N_range, d_range, budget=None, jobs=None) -> SweepReport:
    """Construct and verify a family for every admissible (N, d, n) in the ranges.

    The budget caps the number of entries (one verifying classify call each);
    when it is hit the leading entries are kept and the report is flagged partial.
    Entries are sorted by (N, d, n) whatever the degree of parallelism.
    """
    tasks = sorted(set(sweep_tasks(N_range, d_range)))
    requested = len(tasks)
    partial = budget is not None and requested > budget
    if partial:
        tasks = tasks[:budget]
    jobs = jobs_from_env() if jobs is None else max(1, jobs)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(run_entry, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        entries = [run_entry(t) for t in tasks]
    entries.sort(key=lambda e: (e["N"], e["d"], e["n"]))
    return SweepReport(entries, partial, budget, requested)


def orbit_canonical_form(f: Family):
    """Lexicographically least canonically sorted image under coordinate permutations."""
    best = None
    for perm in permutations(range(f.vars)):
        form = f.permuted(perm).monomials
        if best is None or form < best:
            best = form
    return best


@dataclass
class CensusReport:
    N: int
    d: int
    n: int
    total_families: int
    m_primary_count: int
    counts: dict
    up_to_symmetry: bool = False
    orbits: list = field(default_factory=list)

    def to_dict(self):
        out = {
            "N": self.N,
            "d": self.d,
            "n": self.n,
            "total_families": self.total_families,
            "m_primary_count": self.m_primary_count,
            "counts": dict(self.counts),
            "up_to_symmetry": self.up_to_symmetry,
        }
        if self.up_to_symmetry:
            out["orbit_counts"] = self.orbit_counts
            out["representatives"] = [
                {"verdict": o["verdict"], "orbit_size": o["orbit_size"], "monomials": [list(m) for m in o["form"]]}
                for o in self.orbits
            ]
        return out

    @property
    def orbit_counts(self):
        counts = {key: 0 for key in VERDICT_KEYS.values()}
        for o in self.orbits:
            counts[VERDICT_KEYS[o["verdict"]]] += 1
        return counts

    @property
    def semistable_count(self):
        return self.counts["stable"] + self.counts["strictly-semistable"]

    def to_json(self):
        return dump_json(self.to_dict())

    def to_text(self):
        c = self.counts
        lines = [
            f"N={self.N} d={self.d} n={self.n}",
            f"total: {self.total_families}, m-primary: {self.m_primary_count}",
            f"stable: {c['stable']}, strictly-semistable: {c['strictly-semistable']}, unstable: {c['unstable']}",
        ]
        if self.up_to_symmetry:
            oc = self.orbit_counts
            lines.append(
                f"orbits: {len(self.orbits)} (stable: {oc['stable']}, strictly-semistable: "
                f"{oc['strictly-semistable']}, unstable: {oc['unstable']})"
            )
            rows = [[o["verdict"], str(o["orbit_size"]), str(Family(self.N + 1, o["form"]))] for o in self.orbits]
            if rows:
                lines += format_table(["verdict", "orbit_size", "representative"], rows)
        return "\n".join(lines) + "\n"


def census(N, d, n, up_to_symmetry=False, limit=CENSUS_LIMIT) -> CensusReport:
    """Classify every m-primary family of n degree-d monomials in N + 1 variables.

    With equal degrees, m-primary means all N + 1 pure powers are present, so
    the m-primary families are the pure powers plus (n - N - 1) further
    monomials, visited in lexicographic combination order.
    """
    mons = enumerate_monomials(N + 1, d)
    total = comb(len(mons), n)
    if total > limit:
        raise BudgetExceeded(f"census of {total} families exceeds the limit {limit}")
    powers = [m for m in mons if max(m) == d]
    others = [m for m in mons if max(m) != d]
    counts = {key: 0 for key in VERDICT_KEYS.values()}
    orbits = {}
    m_primary = 0
    extra = n - len(powers)
    if extra >= 0 and n >= 2:
        for combo in combinations(others, extra):
            fam = Family(N + 1, powers + list(combo))
            m_primary += 1
            verdict = classify(fam).verdict.value
            counts[VERDICT_KEYS[verdict]] += 1
            if up_to_symmetry:
                form = orbit_canonical_form(fam)
                if form in orbits:
                    orbits[form]["orbit_size"] += 1
                else:
                    orbits[form] = {"form": form, "verdict": verdict, "orbit_size": 1}
    reps = sorted(orbits.values(), key=lambda o: [tuple(-e for e in m) for m in o["form"]])
    return CensusReport(N, d, n, total, m_primary, counts, up_to_symmetry, reps)
