"""Exception hierarchy shared by every module."""


class SyzstabError(Exception):
    """Base class for all library errors."""


class MonomialError(SyzstabError, ValueError):
    """Bad exponent vector, mismatched variable counts, or an empty fold."""


class FamilyError(SyzstabError, ValueError):
    """A family violates its structural invariants."""


class NotMPrimaryError(SyzstabError, ValueError):
    """The family lacks a pure power of some variable; the syzygy sheaf is not a bundle."""


class SubsetError(SyzstabError, ValueError):
    """A subset descriptor is too small or not contained in the family."""


class OracleLimitError(SyzstabError, ValueError):
    """The brute-force oracle was asked to enumerate more subsets than allowed."""


class ParameterRangeError(SyzstabError, ValueError):
    """An (N, d, n) triple lies outside the admissible range."""


class NoSemistableFamily(SyzstabError):
    """No semistable family of monomials exists for the requested parameters."""


class VerificationError(SyzstabError):
    """A constructed family failed verification even after repair."""


class ExcludedTripleError(SyzstabError):
    """The dimension formulas do not apply to the requested triple."""


class BudgetExceeded(SyzstabError):
    """The work budget or enumeration limit was exceeded."""


class ParseError(SyzstabError, ValueError):
    """Malformed family document."""
