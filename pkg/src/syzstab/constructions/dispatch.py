"""Route (N, d, n) to a recipe, verify the result, repair if needed."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional

from ..criterion import Classification, Verdict, classify
from ..errors import ParameterRangeError, VerificationError
from ..monomials import Family, canonical_key, enumerate_monomials, is_pure_power
from .line import p1_family
from .plane import p2_dispatch
from .space import (
    boundary_plus_interior,
    boundary_size,
    faces_family,
    full_simplex,
    lift,
    pair_blocks,
    shift_interior,
)

REPAIR_ITERATIONS = 200


@dataclass(frozen=True)
class ConstructionResult:
    family: Family
    recipe: str
    expected: Verdict
    repaired: bool
    verification: Optional[Classification]

    @property
    def verdict(self):
        return None if self.verification is None else self.verification.verdict


def check_range(N, d, n):
    if N < 1 or d < 1:
        raise ParameterRangeError(f"need N >= 1 and d >= 1, got N={N}, d={d}")
    total = comb(d + N, N)
    if not (N + 1 <= n <= total):
        raise ParameterRangeError(f"need {N + 1} <= n <= {total} for N={N}, d={d}, got n={n}")


def expected_verdict(N, d, n):
    if (N, d, n) == (2, 2, 5) or (N == 1 and n >= 3):
        return Verdict.STRICTLY_SEMISTABLE
    return Verdict.STABLE


def admissible_n(N, d):
    """Every n for which a (semi)stable family is constructed."""
    if N == 1:
        return [n for n in range(2, d + 2) if d % (n - 1) == 0]
    return list(range(N + 1, comb(d + N, N) + 1))


def _score(c: Classification):
    return float("inf") if c.min_margin is None else c.min_margin


def hill_climb(family: Family, d, expected, max_iter=REPAIR_ITERATIONS):
    """Swap one member for one absent degree-d monomial, keeping the best minimum margin.

    Pure powers are never swapped out, so every candidate stays m-primary.
    Ties go to the swap whose (removed, added) pair comes first in canonical order.
    """
    pool = enumerate_monomials(family.vars, d)
    current = family
    cls = classify(current)
    for _ in range(max_iter):
        if cls.verdict == expected:
            return current, cls
        members = set(current)
        best = None
        for out in current:
            if is_pure_power(out):
                continue
            for inn in pool:
                if inn in members:
                    continue
                cand = Family(current.vars, (members - {out}) | {inn})
                c = classify(cand)
                key = (-_score(c), canonical_key(out), canonical_key(inn))
                if best is None or key < best[0]:
                    best = (key, cand, c)
        if best is None:
            break
        current, cls = best[1], best[2]
    if cls.verdict == expected:
        return current, cls
    raise VerificationError(f"repair did not reach {expected.value} after {max_iter} iterations")


def _recipe(N, d, n):
    """(family, label) from the case split, without verification."""
    if N == 1:
        return p1_family(d, n), "line/equal-steps"
    if d == 1:
        return full_simplex(N, 1), "linear-forms"
    if N == 2:
        return p2_dispatch(d, n)
    total = comb(d + N, N)
    if n <= comb(d + N - 1, N - 1) + 1:
        if (N, d, n) == (3, 2, 6):
            return pair_blocks(3), "space/paired-quadrics"
        return lift(_build(N - 1, d, n - 1)[0], d, check=False), "lift"
    if n <= total - comb(d - 1, N):
        if n == total:
            return full_simplex(N, d), "full-simplex"
        fam, (r, l, i) = faces_family(N, d, n)
        return fam, f"faces/r={r},l={l},i={i}"
    if d == N + 1:
        return full_simplex(N, d), "full-simplex"
    size = boundary_size(N, d)
    if n <= size + N + 1:
        return boundary_plus_interior(N, d, n), "boundary-plus-interior"
    inner = _build(N, d - N - 1, n - size)[0]
    return shift_interior(inner, N, d), "interior-recursion"


@lru_cache(maxsize=8192)
def _build(N, d, n):
    """Verified (family, label, repaired, classification), memoised for recursion."""
    fam, label = _recipe(N, d, n)
    expected = expected_verdict(N, d, n)
    cls = classify(fam)
    repaired = False
    if cls.verdict != expected:
        fam, cls = hill_climb(fam, d, expected)
        repaired = True
    return fam, label, repaired, cls


def construct_family(N, d, n, verify=True) -> ConstructionResult:
    """A family of n degree-d monomials in N + 1 variables with the expected verdict.

    Raises NoSemistableFamily on the line when n - 1 does not divide d.
    With verify=False the recipe output is returned unchecked.
    """
    check_range(N, d, n)
    expected = expected_verdict(N, d, n)
    if not verify:
        fam, label = _recipe(N, d, n)
        return ConstructionResult(fam, label, expected, False, None)
    fam, label, repaired, cls = _build(N, d, n)
    return ConstructionResult(fam, label, expected, repaired, cls)


def interior_recursion(N, d, n):
    """Boundary F_{N,d} plus X0*...*XN times a family for (N, d - N - 1, n - |F|).

    Small remainders (n - |F| <= N + 1) use the boundary-plus-interior layout.
    """
    size = boundary_size(N, d)
    if N < 2 or d <= N + 1 or not (size < n <= comb(d + N, N)):
        raise ParameterRangeError(f"interior recursion needs d > N+1 and {size} < n; got N={N}, d={d}, n={n}")
    if n - size <= N + 1:
        return boundary_plus_interior(N, d, n)
    return shift_interior(construct_family(N, d - N - 1, n - size).family, N, d)
