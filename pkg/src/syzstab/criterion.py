"""Stability classification of monomial syzygy bundles.

For a family f of n monomials with degree sum S_I and a subset J of size k,
degree sum S_J and gcd degree d_J, the integer

    G(J) = -S_I * (k - 1) - (d_J - S_J) * (n - 1)

is the cleared-denominator form of (d_J - S_J)/(k - 1) <= -S_I/(n - 1).
The bundle is stable iff G(J) > 0 for every proper J with |J| >= 2,
strictly semistable iff the minimum is exactly 0, unstable otherwise.
For equal degree d this reduces to (d - d_J) * n + d_J - d * k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional

from .errors import NotMPrimaryError, OracleLimitError, SubsetError
from .monomials import (
    Family,
    Monomial,
    _trusted,
    canonical_key,
    canonical_sorted,
    enumerate_monomials,
    gcd_all,
    gcd_closure,
    is_m_primary,
    render,
)

BRUTEFORCE_LIMIT = 20


class Verdict(str, Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SubsetWitness:
    divisor: Monomial
    d_J: int
    k: int
    margin: int
    members: tuple = ()

    def sort_key(self):
        # Smallest margin first, then the divisor that comes first in
        # canonical order, then the member list in canonical order.
        return (self.margin, canonical_key(self.divisor), tuple(canonical_key(m) for m in self.members))

    def to_dict(self):
        return {
            "divisor": list(self.divisor),
            "d_J": self.d_J,
            "k": self.k,
            "margin": self.margin,
            "members": [list(m) for m in self.members],
        }

    def describe(self):
        mems = ", ".join(render(m) for m in self.members)
        return f"divisor {render(self.divisor)} (d_J={self.d_J}), k={self.k}, margin={self.margin}: {{{mems}}}"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    worst_witness: Optional[SubsetWitness] = None
    all_zero_margin_witnesses: tuple = ()
    violating_witness: Optional[SubsetWitness] = None
    evaluated: int = field(default=0, compare=False)

    @property
    def min_margin(self):
        return None if self.worst_witness is None else self.worst_witness.margin

    def to_dict(self, witnesses=True):
        out = {"verdict": self.verdict.value, "min_margin": self.min_margin}
        if witnesses:
            w = self.worst_witness
            out["worst_witness"] = None if w is None else w.to_dict()
            out["zero_margin_witnesses"] = [z.to_dict() for z in self.all_zero_margin_witnesses]
            v = self.violating_witness
            out["violating_witness"] = None if v is None else v.to_dict()
        return out


class Saturation(NamedTuple):
    members: tuple
    gcd: Optional[Monomial]


def _margin(s_i, n, s_j, k, d_j):
    return -s_i * (k - 1) - (d_j - s_j) * (n - 1)


def margin(f: Family, J) -> int:
    """The integer G(J) for a subset J of f given as an iterable of members."""
    members = [tuple(m) for m in J]
    if len(members) < 2:
        raise SubsetError("a subset needs at least two members")
    if len(set(members)) != len(members):
        raise SubsetError("subset has repeated members")
    for m in members:
        if m not in f:
            raise SubsetError(f"{render(m)} is not a member of the family")
    d_j = sum(gcd_all(members))
    return _margin(sum(f.degrees), len(f), sum(sum(m) for m in members), len(members), d_j)


def saturate(f: Family, g) -> Saturation:
    """All members divisible by g, with their gcd (None when empty)."""
    if sum(g) < 1:
        raise SubsetError("saturation needs a divisor of positive degree")
    g = tuple(g)
    members = tuple(m for m in f if all(x <= y for x, y in zip(g, m)))
    return Saturation(members, gcd_all(members) if members else None)


def _check_input(f: Family):
    if len(f) < 2:
        raise SubsetError("classification needs at least two monomials")
    if any(d < 1 for d in f.degrees):
        raise SubsetError("family members must have positive degree")
    if not is_m_primary(f):
        raise NotMPrimaryError("family is not m-primary: some variable has no pure power")


def _fold(witnesses, evaluated) -> Classification:
    if not witnesses:
        return Classification(Verdict.STABLE, evaluated=evaluated)
    ordered = sorted(witnesses, key=SubsetWitness.sort_key)
    worst = ordered[0]
    zeros = tuple(w for w in ordered if w.margin == 0)
    if worst.margin < 0:
        return Classification(Verdict.UNSTABLE, worst, zeros, worst, evaluated)
    if worst.margin == 0:
        return Classification(Verdict.STRICTLY_SEMISTABLE, worst, zeros, None, evaluated)
    return Classification(Verdict.STABLE, worst, (), None, evaluated)


def _all_divisors(f: Family):
    # Every monomial of degree 1 .. maxdeg-1 dividing at least two members.
    top = max(f.degrees)
    out = []
    for e in range(1, top):
        for g in enumerate_monomials(f.vars, e):
            if sum(1 for m in f if all(x <= y for x, y in zip(g, m))) >= 2:
                out.append(g)
    return out


def classify(f: Family, full_enumeration: bool = False) -> Classification:
    """Exact verdict from the saturated subsets of gcd-closure candidates.

    Equal-degree families: the saturation of each candidate is the
    margin-minimising subset for its gcd, and subsets with trivial gcd always
    have margin d*(n - k) > 0, so they are skipped.

    Mixed-degree families: for each candidate g (including g = 1, since a
    coprime pair of low-degree members can destabilise), the multiples of g
    sorted by ascending degree are evaluated on every proper prefix. Each
    evaluated subset is scored with its true gcd.
    """
    _check_input(f)
    n = len(f)
    degs = f.degrees
    s_i = sum(degs)
    mons = f.monomials
    cands = _all_divisors(f) if full_enumeration else sorted(gcd_closure(f), reverse=True)
    witnesses = {}
    evaluated = 0

    if f.degree is not None:
        for g in cands:
            members = tuple(m for m in mons if all(x <= y for x, y in zip(g, m)))
            if len(members) < 2 or len(members) == n:
                continue
            h = gcd_all(members)
            if h in witnesses:
                continue
            evaluated += 1
            d_j = sum(h)
            witnesses[h] = SubsetWitness(h, d_j, len(members), _margin(s_i, n, f.degree * len(members), len(members), d_j), members)
        return _fold(list(witnesses.values()), evaluated)

    cands = list(cands) + [_trusted((0,) * f.vars)]
    deg_of = dict(zip(mons, degs))
    for g in cands:
        multiples = [m for m in mons if all(x <= y for x, y in zip(g, m))]
        multiples.sort(key=lambda m: (deg_of[m], canonical_key(m)))
        s_j = 0
        h = None
        for k, m in enumerate(multiples, start=1):
            s_j += deg_of[m]
            h = m if h is None else tuple(map(min, h, m))
            if k < 2:
                continue
            if k > n - 1:
                break
            members = tuple(canonical_sorted(multiples[:k]))
            if members in witnesses:
                continue
            evaluated += 1
            d_j = sum(h)
            witnesses[members] = SubsetWitness(_trusted(h), d_j, k, _margin(s_i, n, s_j, k, d_j), members)
    return _fold(list(witnesses.values()), evaluated)


def classify_bruteforce(f: Family, limit: int = BRUTEFORCE_LIMIT) -> Classification:
    """Reference verdict from every proper subset of size >= 2 and its true gcd.

    Witnesses range over the same universe as classify: subsets with
    positive-degree gcd for equal-degree families, every proper subset
    for mixed-degree families.
    """
    _check_input(f)
    n = len(f)
    if n > limit:
        raise OracleLimitError(f"family of size {n} exceeds the brute-force limit {limit}")
    mons = f.monomials
    degs = f.degrees
    s_i = sum(degs)
    equal = f.degree is not None
    best = [None]
    zeros = []
    count = [0]
    chosen = []

    def record(h, d_j, k, m):
        w = None
        if m == 0:
            w = SubsetWitness(_trusted(h), d_j, k, m, tuple(chosen))
            zeros.append(w)
        b = best[0]
        if b is None or m <= b.margin:
            w = w or SubsetWitness(_trusted(h), d_j, k, m, tuple(chosen))
            if b is None or w.sort_key() < b.sort_key():
                best[0] = w

    def rec(start, g, s_j):
        for i in range(start, n):
            m = mons[i]
            h = m if g is None else tuple(map(min, g, m))
            d_j = sum(h)
            if equal and g is not None and d_j == 0:
                # every superset also has trivial gcd
                continue
            chosen.append(m)
            k = len(chosen)
            s2 = s_j + degs[i]
            if 2 <= k <= n - 1:
                count[0] += 1
                record(h, d_j, k, _margin(s_i, n, s2, k, d_j))
            if k < n - 1:
                rec(i + 1, h, s2)
            chosen.pop()

    rec(0, None, 0)
    worst = best[0]
    if worst is None:
        return Classification(Verdict.STABLE, evaluated=count[0])
    zeros.sort(key=SubsetWitness.sort_key)
    if worst.margin < 0:
        return Classification(Verdict.UNSTABLE, worst, tuple(zeros), worst, count[0])
    if worst.margin == 0:
        return Classification(Verdict.STRICTLY_SEMISTABLE, worst, tuple(zeros), None, count[0])
    return Classification(Verdict.STABLE, worst, (), None, count[0])


def agree(a: Classification, b: Classification) -> bool:
    """Same verdict and same minimum margin."""
    return a.verdict == b.verdict and a.min_margin == b.min_margin
