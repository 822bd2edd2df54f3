"""Families of n degree-d monomials in three variables (N = 2).

Layouts follow the usual strategy for the projective plane: pick the monomials
so that no degree-d_J monomial divides more members than X0^d_J does, which
reduces verification to counting multiples of powers of X0.
"""

from __future__ import annotations

from math import comb

from ..errors import ParameterRangeError
from ..monomials import Family, _trusted, enumerate_monomials


def X(a, b, c):
    return _trusted((a, b, c))


def pure_powers(d):
    return [X(d, 0, 0), X(0, d, 0), X(0, 0, d)]


def balanced(d):
    """e0 >= e1 >= e2 summing to d with e0 - e2 <= 1."""
    e0 = -(-d // 3)
    e2 = d // 3
    return e0, d - e0 - e2, e2


def grid(d, parts):
    """i_l = l*m + min(l, t) for l = 0..parts, where d = parts*m + t."""
    m, t = divmod(d, parts)
    return [l * m + min(l, t) for l in range(parts + 1)]


def sides(d, ii, ls):
    """Side points X0^i X1^(d-i), X0^i X2^(d-i), X1^i X2^(d-i) for i = ii[l]."""
    out = []
    for l in ls:
        i = ii[l]
        out += [X(i, d - i, 0), X(i, 0, d - i), X(0, i, d - i)]
    return out


def _family(mons):
    return Family(3, mons)


def three_powers(d):
    return _family(pure_powers(d))


def small_n(d, n):
    """Per-n layouts for 4 <= n <= 18 with n <= d + 2. Returns (family, label)."""
    if not (4 <= n <= 18 and n <= d + 2):
        raise ParameterRangeError(f"small-n layout needs 4 <= n <= min(18, d + 2), got d={d}, n={n}")
    P = pure_powers(d)
    e0, e1, e2 = balanced(d)
    mid = X(e0, e1, e2)
    label = f"plane/small-n/n={n}"
    if n == 4:
        return _family(P + [mid]), label
    if n == 5:
        i = -(-d // 2)
        return _family(P + [mid, X(0, d - i, i)]), label
    hexagon = [X(e0, d - e0, 0), X(d - e0, 0, e0), X(0, e0, d - e0)]
    if n == 6:
        return _family(P + hexagon), label
    if n == 7:
        return _family(P + hexagon + [mid]), label
    if n == 8:
        extra = [X(d - e2, e2, 0), X(e2, 0, d - e2), X(0, d - e2, e2), X(0, e0, d - e0)]
        return _family(P + [mid] + extra), label
    if n == 9:
        if d == 8:
            extra = [X(3, 3, 2), X(6, 2, 0), X(5, 0, 3), X(0, 6, 2), X(0, 3, 5), X(2, 0, 6)]
            return _family(P + extra), label + "/d=8"
        i = grid(d, 3)
        extra = []
        for l in (1, 2):
            extra += [X(i[l], d - i[l], 0), X(d - i[l], 0, i[l]), X(0, i[l], d - i[l])]
        return _family(P + extra), label
    if n in (10, 11):
        if n == 10 and d == 9:
            extra = [X(3, 3, 3), X(6, 3, 0), X(3, 6, 0), X(6, 0, 3), X(3, 0, 6), X(0, 6, 3), X(0, 3, 6)]
            return _family(P + extra), label + "/d=9"
        if n == 11 and d == 12:
            extra = [X(9, 3, 0), X(6, 6, 0), X(3, 9, 0), X(9, 0, 3), X(6, 0, 6), X(3, 0, 9), X(0, 9, 3), X(0, 6, 6)]
            return _family(P + extra), label + "/d=12"
        i = grid(d, 5)
        extra = [
            X(i[2], i[1], d - i[1] - i[2]),
            X(i[4], d - i[4], 0),
            X(i[2], d - i[2], 0),
            X(i[3], 0, d - i[3]),
            X(i[1], 0, d - i[1]),
            X(0, i[2], d - i[2]),
            X(0, i[4], d - i[4]),
        ]
        if n == 11:
            extra.append(X(i[3], d - i[3], 0))
        return _family(P + extra), label
    if n == 12 and d == 11:
        extra = [
            X(8, 3, 0), X(8, 0, 3), X(5, 2, 4), X(4, 4, 3), X(3, 8, 0),
            X(3, 0, 8), X(2, 5, 4), X(0, 8, 3), X(0, 3, 8),
        ]
        return _family(P + extra), label + "/d=11"
    if n in (12, 13, 14, 15):
        # Quarter grid on the three sides, then interior points one at a time.
        i = grid(d, 4)
        mons = P + sides(d, i, (1, 2, 3))
        if n in (13, 14):
            mons.append(X(i[2], i[1], d - i[1] - i[2]))
        if n == 14:
            mons.append(X(i[1], d - i[2], i[2] - i[1]))
        if n == 15:
            mons += [
                X(i[2], d - i[3], i[3] - i[2]),
                X(i[1], d - i[2], i[2] - i[1]),
                X(i[1], d - i[3], i[3] - i[1]),
            ]
        return _family(mons), label
    # n in 16..18: fifth grid on the sides plus interior points.
    i = grid(d, 5)
    mons = P + sides(d, i, (1, 2, 3, 4)) + [X(i[2], d - i[3], i[3] - i[2])]
    if n >= 17:
        mons.append(X(i[2], d - i[4], i[4] - i[2]))
    if n == 18:
        mons.append(X(i[1], d - i[3], i[3] - i[1]))
    return _family(mons), label


def triangular(j):
    return j * (j + 1) // 2


def triangular_layout(d, n):
    """Evenly spread grid of T_(j+2) points plus side points, for 18 < n <= d + 2."""
    if not (18 < n <= d + 2):
        raise ParameterRangeError(f"triangular layout needs 18 < n <= d + 2, got d={d}, n={n}")
    j = 1
    while not (triangular(j + 2) <= n < triangular(j + 3)):
        j += 1
    r = n - triangular(j + 2)
    m, t = divmod(d, j + 1)
    i = [l * m + min(l, t) for l in range(j + 1)] + [d]
    e = -(-m // 2)
    mons = [X(d, 0, 0)]
    for a in range(1, j + 1):
        for b in range(a, j + 2):
            mons.append(X(i[a], d - i[b], i[b] - i[a]))
    mons += [X(0, d, 0), X(0, 0, d)]
    mons += [X(0, i[l], d - i[l]) for l in range(1, j + 1)]
    # Extra side points cycle through the three sides.
    for step in range(r):
        q, side = divmod(step, 3)
        if side == 0:
            a = i[j - q] + e
            mons.append(X(a, d - a, 0))
        elif side == 1:
            a = i[q] + e
            mons.append(X(a, 0, d - a))
        else:
            a = i[q + 1] + e
            mons.append(X(0, a, d - a))
    return _family(mons), f"plane/triangular-grid/j={j},r={r}"


SIDE_SPECIAL = {
    (2, 5): [X(2, 0, 0), X(0, 2, 0), X(0, 0, 2), X(1, 1, 0), X(1, 0, 1)],
    (3, 6): [X(3, 0, 0), X(0, 3, 0), X(0, 0, 3), X(2, 1, 0), X(1, 0, 2), X(0, 2, 1)],
    (3, 7): [X(3, 0, 0), X(0, 3, 0), X(0, 0, 3), X(2, 1, 0), X(1, 0, 2), X(0, 2, 1), X(1, 1, 1)],
    (3, 8): [X(3, 0, 0), X(0, 3, 0), X(0, 0, 3), X(2, 1, 0), X(1, 2, 0), X(2, 0, 1), X(1, 0, 2), X(0, 2, 1)],
    (3, 9): [X(3, 0, 0), X(0, 3, 0), X(0, 0, 3), X(2, 1, 0), X(1, 2, 0), X(2, 0, 1), X(1, 0, 2), X(0, 2, 1), X(0, 1, 2)],
}


def side_sequence(d):
    """Order in which side monomials are added to a full X0X1 side plus X2^d."""
    seq = [X(a, 0, d - a) for a in range(1, d - 1)]
    seq += [X(0, d - 2, 2), X(d - 1, 0, 1)]
    seq += [X(0, b, d - b) for b in range(1, d - 2)]
    seq.append(X(0, d - 1, 1))
    return seq


def side_filling(d, n):
    """Families for d + 2 < n <= 3d."""
    if not (d + 2 < n <= 3 * d):
        raise ParameterRangeError(f"side filling needs d + 2 < n <= 3d, got d={d}, n={n}")
    if d == 2:
        if n == 5:
            return _family(SIDE_SPECIAL[(2, 5)]), "plane/side-filling/d=2,n=5"
        return _family(enumerate_monomials(3, 2)), "plane/side-filling/d=2,n=6"
    if d == 3:
        return _family(SIDE_SPECIAL[(3, n)]), f"plane/side-filling/d=3,n={n}"
    base = [X(d - a, a, 0) for a in range(d + 1)] + [X(0, 0, d)]
    return _family(base + side_sequence(d)[: n - d - 2]), "plane/side-filling"


def full_triangle(d):
    return _family(enumerate_monomials(3, d))


def interior_filling(d, n):
    """Families for 3d < n < C(d+2, 2): complete outer rings, then a partial ring."""
    total = comb(d + 2, 2)
    if not (3 * d < n < total):
        raise ParameterRangeError(f"interior filling needs 3d < n < C(d+2,2), got d={d}, n={n}")
    all_mons = enumerate_monomials(3, d)
    j = 1
    while 3 * j < d:
        lo1 = total - comb(d + 2 - 3 * j, 2)
        lo2 = total - comb(d + 1 - 3 * j, 2)
        lo3 = total - comb(d - 3 * j, 2)
        if lo1 < n <= lo2:
            i = n - lo1
            base = [m for m in all_mons if m[0] < j or m[1] < j or m[2] < j]
            seq = [X(d - 2 * j - a, j + a, j) for a in range(d - 3 * j + 1)]
            return _family(base + seq[:i]), f"plane/interior-rings/case=1,j={j}"
        if lo2 < n <= lo3 or (d == 3 * j + 1 and lo2 < n):
            i = n - lo2
            base = [m for m in all_mons if m[0] < j or m[1] < j or m[2] <= j]
            seq = [X(j + a, j, d - 2 * j - a) for a in range(d - 3 * j)]
            return _family(base + seq[:i]), f"plane/interior-rings/case=2,j={j}"
        if d > 3 * j + 1 and lo3 < n <= total - comb(d - 1 - 3 * j, 2):
            i = n - lo3
            base = [m for m in all_mons if m[0] < j or m[1] <= j or m[2] <= j]
            seq = [X(j, j + 1 + a, d - 2 * j - 1 - a) for a in range(d - 3 * j - 1)]
            return _family(base + seq[:i]), f"plane/interior-rings/case=3,j={j}"
        j += 1
    raise ParameterRangeError(f"no interior layout for d={d}, n={n}")


def p2_dispatch(d, n):
    """Route (d, n) to its layout. Returns (family, label)."""
    total = comb(d + 2, 2)
    if not (3 <= n <= total):
        raise ParameterRangeError(f"need 3 <= n <= {total} for d={d}, got n={n}")
    if n == 3:
        return three_powers(d), "plane/pure-powers"
    if n <= 18 and n <= d + 2:
        return small_n(d, n)
    if n <= d + 2:
        return triangular_layout(d, n)
    if n <= 3 * d:
        return side_filling(d, n)
    if n == total:
        return full_triangle(d), "plane/full-triangle"
    return interior_filling(d, n)
