"""MacLaurin tables and quarter-period Taylor tables for cq^m * sq^n.

The MacLaurin series of cq^m * sq^n collapses onto powers t^(n + pj),

    cq^m(t) sq^n(t) = sum_{j>=0} (-1)^j a_j t^(n + pj),
    a_j = F_j / (n + pj)!  > 0,

where F_j = q[n + pj][j] is the single surviving triangle entry at order
n + pj.  maclaurin produces the a_j directly in binary64 by running the
coefficient recursion on scaled columns f_j = (k!) a_j inside the band, one
division per update, so each a_j is computed with a minimal number of
roundings (many small cases are exact, e.g. the degree-5 squine coefficient
of t^5/5! for p = 4 is exactly -0.15).  integer_maclaurin produces the exact
integer numerators F_j instead.

estimate_terms converts a target tolerance into a series length using the
geometric decay rate of the scaled terms: coefficients decay like R^(-pj)
with R = (pi_p / 4) * sec(pi / p), which exceeds 1 for every p >= 3.  For
p = 2 the decay is factorial, not geometric, and the estimate returns the
sentinel 0 (callers pick the factorial rule instead).

taylor_quarter expands about the quarter period t = pi_p / 4, where
cq = sq = 2^(-1/p).  The k-th Taylor coefficient is

    f_k = 2^(-h_k / p) / k! * sum_j (-1)^j q[k][j],   h_k = n + m + k(p - 2),

so the same coefficient recursion applies, run densely in binary64 with the
1/k! folded in as the rows advance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError
from .triangle import SquigParams, ceil_div

#: Unit roundoff of binary64; default tolerance target for table sizing.
EPS_DEFAULT = 2.0 ** -53


@dataclass(frozen=True)
class MacLaurinTable:
    """Unsigned scaled MacLaurin coefficients a_j of cq^m * sq^n.

    floats[j] holds a_j = F_j / (n + pj)! as a binary64 value; the series is
    sum_j (-1)^j floats[j] t^(n + pj).  numerators, when present, carries the
    exact integers F_j alongside.
    """

    params: SquigParams
    J: int
    floats: tuple[float, ...]
    numerators: tuple[int, ...] | None = None

    def power(self, j: int) -> int:
        """Exponent of t multiplying the j-th coefficient."""
        return self.params.n + self.params.p * j

    def signed(self, j: int) -> float:
        """Signed coefficient (-1)^j a_j."""
        return self.floats[j] if j % 2 == 0 else -self.floats[j]


def _require_series_params(params: SquigParams, J: int) -> None:
    if params.m < 0 or params.n < 0:
        raise ParameterError(
            f"series tables need m, n >= 0, got m={params.m}, n={params.n}"
        )
    if not isinstance(J, int) or J < 0:
        raise ParameterError(f"J must be an int >= 0, got {J!r}")


def maclaurin(params: SquigParams, J: int, with_numerators: bool = False) -> MacLaurinTable:
    """Scaled MacLaurin coefficients a_0..a_J of cq^m * sq^n in binary64.

    Runs the coefficient recursion in place on an array of J + 1 scaled
    columns.  Column j freezes once the recursion passes order n + pj and
    from then on holds a_j exactly as computed.  Updates walk the banded
    column range top-down so each row is formed from the previous row only,
    and each update performs the two integer scalings before a single divide
    by k + 1.

    Parameters
    ----------
    params : SquigParams
        Requires m, n >= 0.
    J : int
        Last coefficient index; the recursion runs to order n + p*J.
    with_numerators : bool
        Also compute the exact integer numerators F_j (slower; the float
        path never touches big integers).

    Examples
    --------
    >>> t = maclaurin(SquigParams(p=4, m=0, n=1), 2)
    >>> t.floats[1] * math.factorial(5)
    18.0
    """
    _require_series_params(params, J)
    p, m, n = params.p, params.m, params.n
    f = [0.0] * (J + 1)
    f[0] = 1.0
    for k in range(n + p * J):
        j_lo = max(ceil_div(k + 1 - n, p), 0)
        j_hi = min(k + 1 - ceil_div(k + 1 - m, p), J)
        for j in range(j_hi, j_lo, -1):
            f[j] = ((n - k + p * j) * f[j] + (m + k * (p - 1) - p * (j - 1)) * f[j - 1]) / (k + 1)
        # At the bottom of the band the subdiagonal neighbor j_lo - 1 froze at
        # an earlier order; include it only when it froze at exactly order k,
        # otherwise its stored value belongs to a lower row and must not leak in.
        if (k - n) % p > 0 or j_lo == 0:
            f[j_lo] = ((n - k + p * j_lo) * f[j_lo]) / (k + 1)
        else:
            f[j_lo] = (
                (n - k + p * j_lo) * f[j_lo]
                + (m + k * (p - 1) - p * (j_lo - 1)) * f[j_lo - 1]
            ) / (k + 1)
    numerators = integer_maclaurin(params, J) if with_numerators else None
    return MacLaurinTable(params=params, J=J, floats=tuple(f), numerators=numerators)


def integer_maclaurin(params: SquigParams, J: int) -> tuple[int, ...]:
    """Exact integer numerators F_0..F_J with F_j = q[n + pj][j].

    Runs the sparse integer recursion to order n + p*J and reads one entry
    per target order.  F_j / (n + pj)! reproduces maclaurin floats up to one
    rounding.
    """
    _require_series_params(params, J)
    p, m, n = params.p, params.m, params.n
    out: list[int] = []
    row: dict[int, int] = {0: 1}
    if n == 0:
        out.append(row[0])
    for k in range(n + p * J):
        nxt: dict[int, int] = {}
        for j, v in row.items():
            c_keep = n - k + p * j
            if c_keep:
                nxt[j] = nxt.get(j, 0) + c_keep * v
            c_shift = m + k * (p - 1) - p * j
            if c_shift:
                nxt[j + 1] = nxt.get(j + 1, 0) + c_shift * v
        row = {j: v for j, v in nxt.items() if v}
        order = k + 1
        if order >= n and (order - n) % p == 0:
            out.append(row[(order - n) // p])
    return tuple(out)


def radius(p: int, pi_p: float) -> float:
    """Geometric decay rate R = (pi_p / 4) sec(pi / p) of the scaled terms.

    R > 1 for p >= 3.  For p = 2 the secant pole makes R infinite, matching
    the entire function there (terms decay factorially).
    """
    if not isinstance(p, int) or p < 2:
        raise ParameterError(f"p must be an int >= 2, got {p!r}")
    if p == 2:
        return math.inf
    return (pi_p / 4.0) / math.cos(math.pi / p)


def estimate_terms(p: int, pi_p: float, epsilon: float) -> int:
    """Number of series terms needed for scaled-term decay below epsilon.

    Term j of the scaled series decays like R^(-pj); the estimate is the
    least J with R^(-pJ) < epsilon, i.e. ceil(-ln(epsilon) / (p ln R)).

    Returns the sentinel 0 for p = 2, where decay is factorial and no finite
    geometric rate applies; callers choose a factorial-based count instead.
    """
    if not isinstance(p, int) or p < 2:
        raise ParameterError(f"p must be an int >= 2, got {p!r}")
    if not 0.0 < epsilon < 1.0:
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    if p == 2:
        return 0
    r = radius(p, pi_p)
    if r <= 1.0:
        raise ParameterError(f"decay rate {r} <= 1; pi_p value {pi_p} is not plausible")
    return math.ceil(-math.log(epsilon) / (p * math.log(r)))


@dataclass(frozen=True)
class TaylorTable:
    """Taylor coefficients f_0..f_K of cq^m * sq^n about the quarter period."""

    params: SquigParams
    K: int
    coeffs: tuple[float, ...]


def taylor_quarter(params: SquigParams, K: int) -> TaylorTable:
    """Taylor table of cq^m * sq^n about t = pi_p / 4, orders 0..K.

    At the quarter period cq = sq = 2^(-1/p), so every term of row k of the
    derivative expansion evaluates to the common power 2^(-h_k / p) with
    h_k = n + m + k(p - 2), leaving the alternating row sum.  Rows are
    advanced densely in binary64 with 1/k! absorbed into the entries.
    """
    _require_series_params(params, K)
    p, m, n = params.p, params.m, params.n
    row = [1.0]
    coeffs: list[float] = []
    for k in range(K + 1):
        h = n + m + k * (p - 2)
        alternating = 0.0
        for j, v in enumerate(row):
            alternating += v if j % 2 == 0 else -v
        coeffs.append(2.0 ** (-h / p) * alternating)
        if k == K:
            break
        nxt = [0.0] * (k + 2)
        for j in range(k + 2):
            keep = row[j] if j <= k else 0.0
            shift = row[j - 1] if j >= 1 else 0.0
            nxt[j] = ((n - k + p * j) * keep + (m + k * (p - 1) - p * (j - 1)) * shift) / (k + 1)
        row = nxt
    return TaylorTable(params=params, K=K, coeffs=tuple(coeffs))
