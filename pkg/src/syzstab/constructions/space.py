"""Building blocks for families in N + 1 >= 4 variables."""

from __future__ import annotations

from math import comb

from ..errors import ParameterRangeError, VerificationError
from ..monomials import Family, _trusted, enumerate_monomials, multiply, pure_power


def full_simplex(N, d):
    """All C(d+N, N) degree-d monomials in N + 1 variables."""
    return Family(N + 1, enumerate_monomials(N + 1, d))


def lift(inner: Family, d, check=True):
    """Append a zero exponent to every member and add the new pure power X_N^d."""
    if check:
        from ..criterion import Verdict, classify

        if classify(inner).verdict != Verdict.STABLE:
            raise VerificationError("lift needs a stable inner family")
    N = inner.vars
    mons = [_trusted(tuple(m) + (0,)) for m in inner]
    mons.append(pure_power(N + 1, N, d))
    return Family(N + 1, mons)


def pair_blocks(N):
    """{X0^2, X1^2, X2^2, X3^2, X0X1, X2X3}: six quadrics in four variables."""
    if N != 3:
        raise ParameterRangeError("the paired quadric family exists for N = 3 only")
    mons = [pure_power(4, i, 2) for i in range(4)] + [(1, 1, 0, 0), (0, 0, 1, 1)]
    return Family(4, mons)


def faces_layout(N, d, n):
    """Locate (r, l, i) with n = |I'_r| + C(l+N-1, N-1) + i.

    i = 0 is accepted only for l = 0, which covers n = |I'_r| + 1; every other
    boundary value is reached with maximal i at the preceding (r, l).
    """
    total = comb(d + N, N)
    for r in range(1, min(d - 1, N) + 1):
        base = total - comb(d - r + N, N)
        for l in range(0, d - r):
            lo = base + comb(l + N - 1, N - 1)
            hi = base + comb(l + N, N - 1)
            if lo < n <= hi or (l == 0 and n == lo):
                return r, l, n - lo
    raise ParameterRangeError(f"n={n} is outside the face layouts for N={N}, d={d}")


def faces_family(N, d, n):
    """Faces N-r+1..N complete, then a partial band of face N-r ordered by X_N-degree."""
    lo = comb(d + N - 1, N - 1) + 1
    hi = comb(d + N, N) - comb(d - 1, N)
    if N < 3 or d < 2 or not (lo < n <= hi):
        raise ParameterRangeError(f"face layout needs N >= 3, d >= 2, {lo} < n <= {hi}; got N={N}, d={d}, n={n}")
    r, l, i = faces_layout(N, d, n)
    tail = range(N - r + 1, N + 1)
    mid = range(N - r + 1, N)
    out = []
    band = []
    for m in enumerate_monomials(N + 1, d):
        if any(m[k] == 0 for k in tail):
            out.append(m)
        elif m[N - r] == 0 and m[N] >= d - r - l + 1:
            out.append(m)
        elif m[N - r] == 0 and m[N] == d - r - l and all(m[k] >= 1 for k in mid):
            # canonical order already favours high X0-degree
            band.append(m)
    out += band[:i]
    return Family(N + 1, out), (r, l, i)


def boundary(N, d):
    """F_{N,d}: the degree-d monomials missing at least one variable."""
    return [m for m in enumerate_monomials(N + 1, d) if 0 in m]


def boundary_size(N, d):
    return comb(d + N, N) - comb(d - 1, N)


def interior_sequence(N, d):
    """X_k^(d-N) times all other variables, k = 0..N."""
    out = []
    for k in range(N + 1):
        out.append(_trusted(tuple(d - N if v == k else 1 for v in range(N + 1))))
    return out


def boundary_plus_interior(N, d, n):
    size = boundary_size(N, d)
    if not (d > N + 1 and size < n <= size + N + 1):
        raise ParameterRangeError(
            f"boundary plus interior needs d > N+1 and {size} < n <= {size + N + 1}; got N={N}, d={d}, n={n}"
        )
    return Family(N + 1, boundary(N, d) + interior_sequence(N, d)[: n - size])


def shift_interior(inner: Family, N, d):
    """F_{N,d} together with X0*...*XN times every member of inner."""
    ones = _trusted((1,) * (N + 1))
    return Family(N + 1, boundary(N, d) + [multiply(ones, m) for m in inner])
