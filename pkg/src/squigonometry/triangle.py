"""Exact integer triangles of derivative coefficients for squigonometric powers.

The squine sq and cosquine cq are the coordinate functions of unit-speed
parametrization of the first-quadrant arc of |x|^p + |y|^p = 1, determined by

    sq' = cq^(p-1),   cq' = -sq^(p-1),   sq(0) = 0,   cq(0) = 1.

Because differentiation maps powers of sq and cq back into the family, the
k-th derivative of cq^m * sq^n is a signed integer combination

    d^k/dt^k [cq^m sq^n] = sum_j (-1)^j q[k][j] cq^(m + k(p-1) - pj) sq^(n - k + pj)

whose unsigned coefficients obey a two-term recursion in k,

    q[k+1][j] = (n - k + pj) q[k][j] + (m + k(p-1) - p(j-1)) q[k][j-1],

seeded by q[0][0] = 1.  For m, n >= 0 every in-band coefficient is a positive
integer and rows are banded: q[k][j] = 0 unless

    max(0, ceil((k - n)/p)) <= j <= k - max(0, ceil((k - m)/p)).

Rows are stored sparsely as {column: value} dicts over Python ints, so entries
never overflow and equality checks are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ParameterError


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a / b for integer a and positive integer b."""
    return -((-a) // b)


def falling_factorial(x: int, k: int) -> int:
    """Falling factorial x * (x - 1) * ... * (x - k + 1); the empty product is 1."""
    if k < 0:
        raise ParameterError(f"falling factorial needs k >= 0, got {k}")
    out = 1
    for i in range(k):
        out *= x - i
    return out


@dataclass(frozen=True)
class SquigParams:
    """Exponent triple: circle degree p, cosquine power m, squine power n.

    p must be an integer >= 2.  m and n may be negative (tangent-type
    quotients); routines that require nonnegative powers check separately.
    """

    p: int
    m: int
    n: int

    def __post_init__(self) -> None:
        for name in ("p", "m", "n"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ParameterError(f"{name} must be an int, got {value!r}")
        if self.p < 2:
            raise ParameterError(f"p must be >= 2, got {self.p}")


@dataclass(frozen=True)
class CoeffTriangle:
    """Rows 0..K of unsigned derivative coefficients for one parameter triple."""

    params: SquigParams
    K: int
    rows: tuple[dict[int, int], ...] = field(repr=False)


def band_limits(params: SquigParams, k: int) -> tuple[int, int]:
    """Column band [j_lo, j_hi] outside which row k vanishes.

    Returns the pair (j_lo, j_hi); the band is empty when j_lo > j_hi, which
    cannot happen for m, n >= 0.
    """
    j_lo = max(ceil_div(k - params.n, params.p), 0)
    j_hi = k - max(ceil_div(k - params.m, params.p), 0)
    return j_lo, j_hi


def build_triangle(params: SquigParams, K: int) -> CoeffTriangle:
    """Build rows 0..K of the coefficient triangle by the two-term recursion.

    Parameters
    ----------
    params : SquigParams
        Requires m >= 0 and n >= 0 so that all in-band entries are positive
        and the banded sparse representation is exact.
    K : int
        Highest derivative order to build, K >= 0.

    Returns
    -------
    CoeffTriangle
        rows[k] maps column j to the exact integer q[k][j]; zero entries are
        absent.

    Examples
    --------
    >>> tri = build_triangle(SquigParams(p=4, m=1, n=0), 4)
    >>> tri.rows[4]
    {1: 6, 2: 81, 3: 18}
    """
    if params.m < 0 or params.n < 0:
        raise ParameterError(f"triangle needs m, n >= 0, got m={params.m}, n={params.n}")
    if not isinstance(K, int) or K < 0:
        raise ParameterError(f"K must be an int >= 0, got {K!r}")
    p, m, n = params.p, params.m, params.n
    rows: list[dict[int, int]] = [{0: 1}]
    for k in range(K):
        cur = rows[k]
        nxt: dict[int, int] = {}
        for j, v in cur.items():
            c_keep = n - k + p * j
            if c_keep:
                nxt[j] = nxt.get(j, 0) + c_keep * v
            c_shift = m + k * (p - 1) - p * j
            if c_shift:
                nxt[j + 1] = nxt.get(j + 1, 0) + c_shift * v
        rows.append({j: v for j, v in nxt.items() if v})
    return CoeffTriangle(params=params, K=K, rows=tuple(rows))


def coefficient(tri: CoeffTriangle, k: int, j: int) -> int:
    """Exact q[k][j]; zero for any (k, j) outside the stored band."""
    if not 0 <= k <= tri.K:
        raise ParameterError(f"k must be in [0, {tri.K}], got {k}")
    return tri.rows[k].get(j, 0)


def verify_structure(tri: CoeffTriangle) -> list[str]:
    """Check structural invariants of a triangle; return a list of violations.

    An empty list means the triangle passes.  Checked per row k:

    * support lies inside the band from band_limits,
    * both band edges are nonzero (they equal falling factorials of n and m),
    * every stored entry is a positive integer,
    * edge values match n falling k (column j_lo when the left edge is
      unclamped) and m falling k (column k on the diagonal while unclamped).
    """
    problems: list[str] = []
    p, m, n = tri.params.p, tri.params.m, tri.params.n
    if m == 0 and n == 0:
        # The constant function: every derivative vanishes identically and
        # the band/edge statements do not apply.
        for k, row in enumerate(tri.rows):
            if k == 0 and row != {0: 1}:
                problems.append("row 0 of the constant function must be {0: 1}")
            if k > 0 and row:
                problems.append(f"row {k} of the constant function has {len(row)} entries")
        return problems
    for k, row in enumerate(tri.rows):
        j_lo, j_hi = band_limits(tri.params, k)
        for j, v in row.items():
            if not j_lo <= j <= j_hi:
                problems.append(f"row {k}: column {j} outside band [{j_lo}, {j_hi}]")
            if v <= 0:
                problems.append(f"row {k}: entry at column {j} is {v}, not positive")
        if row.get(j_lo, 0) == 0:
            problems.append(f"row {k}: left band edge {j_lo} is zero")
        if row.get(j_hi, 0) == 0:
            problems.append(f"row {k}: right band edge {j_hi} is zero")
        if k <= n and row.get(0, 0) != falling_factorial(n, k):
            problems.append(f"row {k}: column 0 is {row.get(0, 0)}, expected n falling {k}")
        if k <= m and row.get(k, 0) != falling_factorial(m, k):
            problems.append(f"row {k}: column {k} is {row.get(k, 0)}, expected m falling {k}")
    return problems


def triangle_to_json(tri: CoeffTriangle) -> str:
    """Serialize a triangle to JSON with integers as decimal strings.

    Values are emitted as strings so arbitrary-precision entries survive
    round-trips through JSON parsers that would coerce large numbers to
    binary64.
    """
    doc = {
        "p": tri.params.p,
        "m": tri.params.m,
        "n": tri.params.n,
        "K": tri.K,
        "rows": [
            [[j, str(v)] for j, v in sorted(row.items())]
            for row in tri.rows
        ],
    }
    return json.dumps(doc)


def triangle_from_json(text: str) -> CoeffTriangle:
    """Inverse of triangle_to_json; round-trips exactly."""
    doc = json.loads(text)
    params = SquigParams(p=doc["p"], m=doc["m"], n=doc["n"])
    rows = tuple({int(j): int(v) for j, v in row} for row in doc["rows"])
    if len(rows) != doc["K"] + 1:
        raise ParameterError("serialized triangle has wrong row count")
    return CoeffTriangle(params=params, K=doc["K"], rows=rows)
