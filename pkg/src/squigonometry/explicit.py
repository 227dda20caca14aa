"""Non-recursive routes to the derivative coefficients.

Each unsigned coefficient q[k][j] is a sum over the C(k, j) ways to place j
markers on the steps 0..k-1.  Reading the steps in order with r ones already
placed before step l, a marked step contributes the factor m + l(p-1) - pr
and an unmarked step contributes n + pr - l; the product of the k factors,
summed over all placements, is q[k][j].  This closed form needs no lower
rows, at exponential cost in j.

When k = n + pj (the orders that survive in the MacLaurin series of
cq^m sq^n) the placements with nonzero product admit a local description:
writing l_0 < ... < l_(j-1) for the marked steps, the product is nonzero
exactly when every marked step avoids m + l_r (p-1) = pr and no value
n + pr falls strictly between l_(r-1) and l_r (with l_(-1) = -1).
enumerate_nonzero generates exactly these placements; a brute-force filter
of all placements is kept alongside as the oracle it is verified against.
count_lower_bound gives the closed-form floor (n+1)(p-1)^(j-1) for how many
there are.

corollary_coefficient turns the same factor sums into MacLaurin
coefficients, valid also for negative cosquine powers (tangent-type
series), and matrix_factorial_row rebuilds triangle rows as a product of
banded integer matrices acting on the first basis vector.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .errors import CostGuardError, ParameterError
from .triangle import SquigParams

#: Hard ceilings keeping the exponential routes at desk scale.
MAX_EXPLICIT_ORDER = 22
MAX_ENUMERATION_ORDER = 26
MAX_COROLLARY_CHOICES = 400_000


def _product_for_placement(params: SquigParams, k: int, ones: tuple[int, ...]) -> int:
    p, m, n = params.p, params.m, params.n
    prod = 1
    prefix = 0
    marked = set(ones)
    for l in range(k):
        if l in marked:
            prod *= m + l * (p - 1) - p * prefix
            prefix += 1
        else:
            prod *= n + p * prefix - l
        if prod == 0:
            return 0
    return prod


def explicit_coefficient(params: SquigParams, k: int, j: int) -> int:
    """q[k][j] summed directly over all C(k, j) marker placements.

    Exact integers throughout; exponential in j, so orders are capped at
    MAX_EXPLICIT_ORDER.  Independent of the recursion: no other rows are
    consulted.
    """
    if params.m < 0 or params.n < 0:
        raise ParameterError("explicit coefficients need m, n >= 0")
    if not isinstance(k, int) or not isinstance(j, int) or k < 0 or j < 0:
        raise ParameterError(f"k, j must be ints >= 0, got k={k!r}, j={j!r}")
    if k > MAX_EXPLICIT_ORDER:
        raise CostGuardError(f"k={k} exceeds the explicit-sum cap {MAX_EXPLICIT_ORDER}")
    if j > k:
        return 0
    total = 0
    for ones in combinations(range(k), j):
        total += _product_for_placement(params, k, ones)
    return total


def filter_nonzero_brute(params: SquigParams, k: int, j: int) -> list[tuple[int, ...]]:
    """All marker placements with nonzero product, by trying every one.

    The oracle enumerate_nonzero is checked against; same cost cap as the
    enumeration so the two stay comparable.
    """
    if params.m < 0 or params.n < 0:
        raise ParameterError("placement filtering needs m, n >= 0")
    if k > MAX_ENUMERATION_ORDER:
        raise CostGuardError(f"k={k} exceeds the enumeration cap {MAX_ENUMERATION_ORDER}")
    return [
        ones
        for ones in combinations(range(k), j)
        if _product_for_placement(params, k, ones) != 0
    ]


def enumerate_nonzero(params: SquigParams, k: int, j: int) -> list[tuple[int, ...]]:
    """Placements with nonzero product at a series order k = n + pj.

    Generated from the local conditions rather than by filtering: marked
    steps l_0 < ... < l_(j-1) qualify exactly when

    * m + l_r (p - 1) != p r for every r, and
    * no stretch of unmarked steps contains n + p r, i.e.
      l_r <= n + p r or l_(r-1) >= n + p r, with l_(-1) = -1.

    At k = n + pj the stretch above the last marker is automatically safe.
    Returns placements in lexicographic order; equals filter_nonzero_brute
    as a set.
    """
    if params.m < 0 or params.n < 0:
        raise ParameterError("enumeration needs m, n >= 0")
    if not isinstance(k, int) or not isinstance(j, int) or k < 0 or j < 0:
        raise ParameterError(f"k, j must be ints >= 0, got k={k!r}, j={j!r}")
    if k != params.n + params.p * j:
        raise ParameterError(
            f"enumeration applies at series orders k = n + p j; "
            f"got k={k}, n + p j = {params.n + params.p * j}"
        )
    if k > MAX_ENUMERATION_ORDER:
        raise CostGuardError(f"k={k} exceeds the enumeration cap {MAX_ENUMERATION_ORDER}")
    p, m, n = params.p, params.m, params.n
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(r: int, low: int) -> None:
        if r == j:
            out.append(tuple(chosen))
            return
        # Remaining markers r..j-1 must fit below k.
        for l in range(low, k - (j - 1 - r)):
            if m + l * (p - 1) == p * r:
                continue
            prev = chosen[-1] if chosen else -1
            boundary = n + p * r
            if not (l <= boundary or prev >= boundary):
                continue
            chosen.append(l)
            extend(r + 1, l + 1)
            chosen.pop()

    extend(0, 0)
    return out


def count_lower_bound(n: int, p: int, j: int) -> int:
    """Floor (n + 1)(p - 1)^(j - 1) on the number of nonzero placements.

    Counts the placements reachable by always marking within the first
    admissible window; the true count grows much faster.
    """
    if not isinstance(p, int) or p < 2:
        raise ParameterError(f"p must be an int >= 2, got {p!r}")
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f"n must be an int >= 0, got {n!r}")
    if not isinstance(j, int) or j < 1:
        raise ParameterError(f"j must be an int >= 1, got {j!r}")
    return (n + 1) * (p - 1) ** (j - 1)


def corollary_coefficient(params: SquigParams, j: int) -> float:
    """Signed MacLaurin coefficient of t^(n + pj) in cq^m sq^n, closed form.

    Sums the placement products at order k = n + pj and divides by k!,
    attaching the sign (-1)^j; the arithmetic is exact rationals until the
    final binary64 conversion.  Valid for negative m as well (the quotient
    series such as the tangent analog), where the recursion does not apply.
    """
    if not isinstance(j, int) or j < 0:
        raise ParameterError(f"j must be an int >= 0, got {j!r}")
    if params.n < 0:
        raise ParameterError("corollary coefficients need n >= 0")
    k = params.n + params.p * j
    if math.comb(k, j) > MAX_COROLLARY_CHOICES:
        raise CostGuardError(
            f"C({k}, {j}) placements exceed the corollary cap {MAX_COROLLARY_CHOICES}"
        )
    total = 0
    for ones in combinations(range(k), j):
        total += _product_for_placement(params, k, ones)
    signed = Fraction(total, math.factorial(k))
    if j % 2 == 1:
        signed = -signed
    return float(signed)


def matrix_factorial_row(params: SquigParams, k: int, size: int) -> list[int]:
    """Row k of the triangle as a banded-matrix product applied to e_0.

    Builds A = I - (p-1) S and B with diagonal n + p i and subdiagonal
    m + p - p i (S the subdiagonal shift), then applies T_l = B - l A for
    l = 0..k-1 to the first basis vector.  The result vector has q[k][j] in
    slot j; size must be at least k + 1 so no entry is truncated.
    """
    if not isinstance(k, int) or k < 0:
        raise ParameterError(f"k must be an int >= 0, got {k!r}")
    if not isinstance(size, int) or size < k + 1:
        raise ParameterError(f"size must be an int >= k + 1 = {k + 1}, got {size!r}")
    p, m, n = params.p, params.m, params.n
    a_mat = [[0] * size for _ in range(size)]
    b_mat = [[0] * size for _ in range(size)]
    for i in range(size):
        a_mat[i][i] = 1
        b_mat[i][i] = n + p * i
        if i >= 1:
            a_mat[i][i - 1] = -(p - 1)
            b_mat[i][i - 1] = (m + p) - p * i
    vec = [0] * size
    vec[0] = 1
    for l in range(k):
        t_mat = [
            [b_mat[i][c] - l * a_mat[i][c] for c in range(size)]
            for i in range(size)
        ]
        vec = [
            sum(t_mat[i][c] * vec[c] for c in range(size))
            for i in range(size)
        ]
    return vec
