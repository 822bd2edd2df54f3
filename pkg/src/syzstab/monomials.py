"""Exponent-vector arithmetic for monomials and monomial families.

A monomial X0^a0 * ... * XN^aN is stored as the tuple (a0, ..., aN).
Families are kept in canonical order: lexicographically descending
exponent vectors, so X0^d comes first and XN^d last.
"""

from __future__ import annotations

from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

from .errors import FamilyError, MonomialError

MAX_DEGREE = 2**16


class Monomial(tuple):
    """An exponent vector. Tuple semantics, so hashing and comparison are free."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(exponents)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool):
                raise MonomialError(f"exponent {e!r} is not an integer")
            if e < 0:
                raise MonomialError(f"negative exponent in {exps}")
        if sum(exps) > MAX_DEGREE:
            raise MonomialError(f"degree exceeds the supported bound {MAX_DEGREE}")
        return super().__new__(cls, exps)

    @property
    def vars(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"Monomial({tuple(self)!r})"

    def __str__(self):
        return render(self)


def _trusted(exps) -> Monomial:
    # Skip validation for results of min/add on already valid monomials.
    return tuple.__new__(Monomial, exps)


def as_monomial(m) -> Monomial:
    return m if isinstance(m, Monomial) else Monomial(m)


def _check_vars(a, b):
    if len(a) != len(b):
        raise MonomialError(f"mismatched variable counts: {len(a)} vs {len(b)}")


def degree(m) -> int:
    return sum(m)


def divides(a, b) -> bool:
    """True iff a divides b, i.e. a <= b componentwise."""
    _check_vars(a, b)
    return all(x <= y for x, y in zip(a, b))


def gcd(a, b) -> Monomial:
    _check_vars(a, b)
    return _trusted(map(min, a, b))


def gcd_all(monomials: Iterable) -> Monomial:
    """Fold gcd over a non-empty collection."""
    items = list(monomials)
    if not items:
        raise MonomialError("gcd of an empty collection")
    first = items[0]
    for m in items[1:]:
        _check_vars(first, m)
    return _trusted(reduce(lambda x, y: tuple(map(min, x, y)), items))


def multiply(a, b) -> Monomial:
    _check_vars(a, b)
    return _trusted(x + y for x, y in zip(a, b))


def canonical_key(m):
    """Sort key that puts monomials in canonical (lex-descending) order."""
    return tuple(-e for e in m)


def canonical_sorted(monomials: Iterable) -> list:
    return sorted(monomials, reverse=True)


def enumerate_monomials(vars: int, d: int) -> list:
    """All degree-d monomials in `vars` variables, in canonical order."""
    if vars < 1:
        raise MonomialError("need at least one variable")
    if d < 0:
        raise MonomialError("degree must be non-negative")
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(_trusted(prefix + (remaining,)))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, vars)
    return out


def pure_power(vars: int, i: int, d: int) -> Monomial:
    exps = [0] * vars
    exps[i] = d
    return _trusted(exps)


def is_pure_power(m) -> bool:
    """True iff m = X_i^a for some i and some a >= 1."""
    nonzero = [e for e in m if e]
    return len(nonzero) == 1


def render(m) -> str:
    """Human-readable form such as X0^2*X1; the constant monomial renders as 1."""
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"X{i}")
        elif e > 1:
            parts.append(f"X{i}^{e}")
    return "*".join(parts) if parts else "1"


class Family:
    """An ordered set of distinct monomials sharing a variable count.

    Members are stored in canonical order regardless of input order.
    """

    __slots__ = ("vars", "monomials", "_index")

    def __init__(self, vars: int, monomials: Iterable):
        if not isinstance(vars, int) or vars < 2:
            raise FamilyError("a family needs at least two variables")
        mons = [as_monomial(m) for m in monomials]
        for m in mons:
            if len(m) != vars:
                raise FamilyError(f"monomial {tuple(m)} does not have {vars} exponents")
        if len(set(mons)) != len(mons):
            raise FamilyError("duplicate monomials in family")
        self.vars = vars
        self.monomials = tuple(canonical_sorted(mons))
        self._index = frozenset(self.monomials)

    @classmethod
    def of(cls, monomials: Sequence):
        """Build a family, inferring the variable count from the first member."""
        mons = list(monomials)
        if not mons:
            raise FamilyError("cannot infer the variable count of an empty family")
        return cls(len(mons[0]), mons)

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __contains__(self, m):
        return tuple(m) in self._index

    def __eq__(self, other):
        if not isinstance(other, Family):
            return NotImplemented
        return self.vars == other.vars and self.monomials == other.monomials

    def __hash__(self):
        return hash((self.vars, self.monomials))

    def __repr__(self):
        return f"Family({self.vars}, {[tuple(m) for m in self.monomials]})"

    def __str__(self):
        return "{" + ", ".join(render(m) for m in self.monomials) + "}"

    @property
    def degrees(self) -> list:
        return [sum(m) for m in self.monomials]

    @property
    def degree(self):
        """Common degree of the members, or None for mixed-degree families."""
        degs = set(self.degrees)
        return degs.pop() if len(degs) == 1 else None

    def permuted(self, perm: Sequence[int]) -> "Family":
        """Apply the coordinate permutation sending variable i to variable perm[i]."""
        out = []
        for m in self.monomials:
            exps = [0] * self.vars
            for i, e in enumerate(m):
                exps[perm[i]] = e
            out.append(_trusted(exps))
        return Family(self.vars, out)


def gcd_closure(f) -> set:
    """All positive-degree gcds of subsets of size >= 2 of f.

    Built from the pairwise gcds and then closed by taking gcds with single
    members, which reaches gcd(J) for every J since gcd(J + m) = gcd(gcd(J), m).
    """
    mons = list(f)
    if len(mons) < 2:
        raise FamilyError("gcd closure needs at least two monomials")
    found = set()
    frontier = []
    for a, b in combinations(mons, 2):
        g = tuple(map(min, a, b))
        if any(g) and g not in found:
            found.add(g)
            frontier.append(g)
    while frontier:
        nxt = []
        for g in frontier:
            for m in mons:
                h = tuple(map(min, g, m))
                if h != g and any(h) and h not in found:
                    found.add(h)
                    nxt.append(h)
        frontier = nxt
    return {_trusted(g) for g in found}


def is_m_primary(f) -> bool:
    mons = list(f.monomials) if isinstance(f, Family) else list(f)
    if not mons:
        return False
    covered = set()
    for m in mons:
        if is_pure_power(m):
            covered.add(next(i for i, e in enumerate(m) if e))
    return len(covered) == len(mons[0])
