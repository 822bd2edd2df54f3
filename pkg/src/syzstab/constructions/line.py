"""Families on the projective line (two variables)."""

from ..errors import NoSemistableFamily, ParameterRangeError
from ..monomials import Family


def p1_family(d, n):
    """{X0^(d-ke) X1^(ke) : k = 0..n-1} with e = d/(n-1)."""
    if not (2 <= n <= d + 1):
        raise ParameterRangeError(f"need 2 <= n <= d + 1 on the line, got d={d}, n={n}")
    if d % (n - 1):
        raise NoSemistableFamily(
            f"no semistable family of {n} monomials of degree {d} in two variables: "
            f"n - 1 = {n - 1} does not divide d = {d}"
        )
    e = d // (n - 1)
    return Family(2, [(d - k * e, k * e) for k in range(n)])
