"""Numerical invariants of syzygy bundles of n general degree-d forms and their moduli.

Everything is exact: integers from math.comb and slopes as Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ExcludedTripleError, NotMPrimaryError, ParameterRangeError, SubsetError
from .monomials import Family, is_m_primary

EXCLUDED = (2, 2, 5)


def chern_classes(N, d, n):
    """c_1..c_N of the bundle, from c(E) = (1 - d t)^n truncated at t^(N+1)."""
    return tuple(comb(n, i) * (-d) ** i for i in range(1, N + 1))


@dataclass(frozen=True)
class ModuliReport:
    N: int
    d: int
    n: int

    def __post_init__(self):
        N, d, n = self.N, self.d, self.n
        if N < 2 or d < 1 or not (N + 1 <= n <= comb(d + N, N)):
            raise ParameterRangeError(f"need N >= 2, d >= 1, {N + 1} <= n <= C(d+N, N); got ({N}, {d}, {n})")

    @property
    def excluded(self):
        return (self.N, self.d, self.n) == EXCLUDED

    def _require(self):
        if self.excluded:
            raise ExcludedTripleError("dimension and cohomology formulas exclude (N, d, n) = (2, 2, 5)")

    @property
    def rank(self):
        return self.n - 1

    @property
    def chern(self):
        return chern_classes(self.N, self.d, self.n)

    @property
    def slope(self):
        return Fraction(-self.d * self.n, self.n - 1)

    @property
    def dim_stratum(self):
        self._require()
        return self.n * comb(self.d + self.N, self.N) - self.n**2

    @property
    def codim(self):
        self._require()
        return self.n * comb(self.d - 1, 2) if self.N == 2 else 0

    @property
    def dim_component(self):
        return self.dim_stratum + self.codim

    @property
    def ext1(self):
        return self.dim_component

    @property
    def ext2(self):
        self._require()
        return self.n * comb(self.d - 1, 3) if self.N == 3 else 0

    @property
    def h_E(self):
        self._require()
        N, d, n = self.N, self.d, self.n
        return (0, 1, n * comb(d - 1, 2) if N == 2 else 0, n * comb(d - 1, 3) if N == 3 else 0)

    @property
    def h_Ed(self):
        self._require()
        return (0, comb(self.N + self.d, self.d) - self.n, 0, 0)

    def to_dict(self):
        out = {
            "N": self.N,
            "d": self.d,
            "n": self.n,
            "rank": self.rank,
            "chern": list(self.chern),
            "slope": str(self.slope),
        }
        if self.excluded:
            out["excluded"] = True
            return out
        out.update(
            excluded=False,
            dim_stratum=self.dim_stratum,
            dim_component=self.dim_component,
            codim=self.codim,
            h_E=list(self.h_E),
            h_Ed=list(self.h_Ed),
            ext1=self.ext1,
            ext2=self.ext2,
        )
        return out


def moduli_report(N, d, n) -> ModuliReport:
    """Report for (N, d, n). Dimension fields raise ExcludedTripleError at (2, 2, 5)."""
    return ModuliReport(N, d, n)


def slope(f: Family) -> Fraction:
    """c_1 / rank = -(sum of degrees) / (n - 1)."""
    if len(f) < 2:
        raise SubsetError("slope needs at least two monomials")
    if not is_m_primary(f):
        raise NotMPrimaryError("family is not m-primary")
    return Fraction(-sum(f.degrees), len(f) - 1)
