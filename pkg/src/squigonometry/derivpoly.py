"""Derivative rows as polynomials in u = sq^p / (cq^p - 1), and their roots.

On the first quadrant put u = sq^p(t) / (cq^p(t) - 1), which sweeps the
negative axis.  Factoring the common power out of the k-th derivative row of
cq^m sq^n leaves a polynomial Q_k(u) = sum_j q[k][j] u^j whose coefficients
are the unsigned triangle entries, linked level to level by

    Q_(k+1) = (n - k + (m + k(p-1)) u) Q_k + p u (1 - u) Q_k'.

Zeros of the k-th derivative in the open quadrant correspond one-to-one to
negative real roots of Q_k after deflating the power u^z carried by the band
offset z = max(0, ceil((k-n)/p)).  Consecutive levels strictly interlace,
which drives the root finder: roots of the next level are bracketed by roots
of the current one (plus an outer Cauchy bound and 0), detected by exact
integer sign evaluation at dyadic probe points, and pinned down by bisection
that never misattributes a sign.  The count per level is forced by the band
width; a mismatch raises RootCountError rather than returning a guess.

Given a root u < 0, the defining relations invert to exact function values

    cq = (1 - u)^(-1/p),   sq = (u / (u - 1))^(1/p),

so each interior zero of the k-th derivative yields algebraic squine and
cosquine values there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParameterError, RootCountError
from .evalcore import EvalContext, cq, sq
from .triangle import CoeffTriangle, SquigParams, band_limits, build_triangle, ceil_div


@dataclass(frozen=True)
class DerivPolynomial:
    """Level-k polynomial Q_k; coeffs[j] = q[k][j], dense, length k + 1."""

    params: SquigParams
    k: int
    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class RootSet:
    """Negative real roots of one level, after deflating u^zero_multiplicity."""

    k: int
    zero_multiplicity: int
    negative_roots: tuple[float, ...]


def q_polynomial(tri: CoeffTriangle, k: int) -> DerivPolynomial:
    """Dense polynomial view of triangle row k."""
    if not 0 <= k <= tri.K:
        raise ParameterError(f"k must be in [0, {tri.K}], got {k}")
    row = tri.rows[k]
    return DerivPolynomial(
        params=tri.params,
        k=k,
        coeffs=tuple(row.get(j, 0) for j in range(k + 1)),
    )


def polynomial_step(q: DerivPolynomial) -> DerivPolynomial:
    """Advance one level by the first-order recurrence in exact integers.

    Implements Q_(k+1) = (n - k + (m + k(p-1)) u) Q_k + p u (1 - u) Q_k';
    coefficient-by-coefficient this reproduces the two-term triangle
    recursion, so stepping a triangle row reproduces the next row.
    """
    p, m, n = q.params.p, q.params.m, q.params.n
    k = q.k
    out = [0] * (k + 2)
    for j, c in enumerate(q.coeffs):
        if c == 0:
            continue
        out[j] += (n - k) * c
        out[j + 1] += (m + k * (p - 1)) * c
        # p u (1 - u) d/du[u^j] = p j u^j - p j u^(j+1)
        out[j] += p * j * c
        out[j + 1] -= p * j * c
    return DerivPolynomial(params=q.params, k=k + 1, coeffs=tuple(out))


def kth_derivative_value(ctx: EvalContext, tri: CoeffTriangle, k: int, t: float) -> float:
    """Value of d^k/dt^k [cq^m sq^n] at t from triangle row k.

    Sums (-1)^j q[k][j] cq^a sq^b over the row with the exponents
    a = m + k(p-1) - pj, b = n - k + pj.  Negative exponents appear once k
    exceeds n, so t is restricted to the open first quadrant where both
    functions are positive.
    """
    if ctx.p != tri.params.p:
        raise ParameterError(f"context is for p={ctx.p}, triangle for p={tri.params.p}")
    if not 0 <= k <= tri.K:
        raise ParameterError(f"k must be in [0, {tri.K}], got {k}")
    if not 0.0 < t < 2.0 * ctx.quarter:
        raise DomainError(f"t={t!r} outside the open first quadrant")
    p, m, n = tri.params.p, tri.params.m, tri.params.n
    cq_val = cq(ctx, t)
    sq_val = sq(ctx, t)
    total = 0.0
    for j, coef in sorted(tri.rows[k].items()):
        term = float(coef) * cq_val ** (m + k * (p - 1) - p * j) * sq_val ** (n - k + p * j)
        total += term if j % 2 == 0 else -term
    return total


# ---------------------------------------------------------------------------
# Exact sign evaluation and root isolation.

def _sign_at_dyadic(coeffs: list[int], value: float) -> int:
    # Sign of sum coeffs[i] * value^i, exactly: binary64 values are dyadic
    # rationals, so the Horner accumulation stays in Fraction without error.
    x = Fraction(value)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


def _cauchy_bound(coeffs: list[int]) -> float:
    lead = coeffs[-1]
    top = max(abs(c) for c in coeffs[:-1]) if len(coeffs) > 1 else 0
    return 1.0 + float(Fraction(top, abs(lead)))


def _bisect(coeffs: list[int], lo: float, hi: float, sign_lo: int) -> float:
    # Bisection with exact signs at binary64 midpoints; runs to float
    # exhaustion, so the returned root is correct to adjacent floats.
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        s = _sign_at_dyadic(coeffs, mid)
        if s == 0:
            return mid
        if s == sign_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _bracketed_roots(coeffs: list[int], probes: list[float], expected: int) -> list[float]:
    # Scan sign changes between consecutive probes; if the count disagrees
    # with theory, subdivide each gap before giving up.
    for subdivide in (1, 32):
        points: list[float] = []
        for a, b in zip(probes, probes[1:]):
            for i in range(subdivide):
                points.append(a + (b - a) * i / subdivide)
        points.append(probes[-1])
        signs = [_sign_at_dyadic(coeffs, x) for x in points]
        brackets = [
            (points[i], points[i + 1], signs[i])
            for i in range(len(points) - 1)
            if signs[i] != 0 and signs[i + 1] != 0 and signs[i] != signs[i + 1]
        ]
        if len(brackets) == expected:
            return [_bisect(coeffs, lo, hi, s) for lo, hi, s in brackets]
    raise RootCountError(
        f"found {len(brackets)} sign changes, expected {expected} roots"
    )


def root_ladder(params: SquigParams, k_max: int) -> list[RootSet]:
    """Negative roots of every level 0..k_max, each bracketed by the last.

    Builds the triangle once and walks it upward; level k + 1 roots are
    isolated between consecutive level-k roots together with an outer Cauchy
    bound and 0.  All sign decisions are exact, so the forced per-level root
    count either comes out right or raises RootCountError.
    """
    if params.m < 0 or params.n < 0:
        raise ParameterError("root ladders need m, n >= 0")
    if not isinstance(k_max, int) or k_max < 0:
        raise ParameterError(f"k_max must be an int >= 0, got {k_max!r}")
    tri = build_triangle(params, k_max)
    ladder: list[RootSet] = []
    prev_roots: list[float] = []
    for k in range(k_max + 1):
        row = tri.rows[k]
        j_lo, j_hi = band_limits(params, k)
        expected = j_hi - j_lo
        coeffs = [row.get(j_lo + i, 0) for i in range(expected + 1)]
        if coeffs[0] == 0 or coeffs[-1] == 0:
            raise RootCountError(f"level {k}: band edge vanished, triangle malformed")
        if expected == 0:
            roots: list[float] = []
        else:
            probes = [-_cauchy_bound(coeffs)] + prev_roots + [0.0]
            roots = _bracketed_roots(coeffs, probes, expected)
        ladder.append(
            RootSet(k=k, zero_multiplicity=j_lo, negative_roots=tuple(roots))
        )
        prev_roots = roots
    return ladder


def real_roots(q: DerivPolynomial) -> RootSet:
    """Negative roots of one level; computed by climbing the full ladder."""
    return root_ladder(q.params, q.k)[q.k]


def interlacing_check(lower: RootSet, upper: RootSet, min_gap: float = 1e-10) -> bool:
    """Whether two consecutive levels' roots strictly interlace.

    Merged in increasing order, roots must alternate between the two levels
    (counts differing by at most one), all lie strictly below 0, and no pair
    may sit closer than min_gap.  Both orientations are accepted: depending
    on which band edge moves, either level may own the leftmost root.
    """
    u = upper.negative_roots
    v = lower.negative_roots
    if abs(len(u) - len(v)) > 1:
        return False
    merged = sorted([(x, 0) for x in v] + [(x, 1) for x in u])
    for (a, side_a), (b, side_b) in zip(merged, merged[1:]):
        if side_a == side_b:
            return False
        if b - a < min_gap:
            return False
    if merged and merged[-1][0] >= -min_gap:
        return False
    return True


def algebraic_values(u: float, p: int) -> tuple[float, float]:
    """Exact-form cosquine and squine at a polynomial root u <= 0.

    Inverts u = sq^p / (cq^p - 1) on the first quadrant:
    cq = (1 - u)^(-1/p), sq = (u / (u - 1))^(1/p).  Returns (cq, sq).
    """
    if not isinstance(p, int) or p < 2:
        raise ParameterError(f"p must be an int >= 2, got {p!r}")
    if not u <= 0.0:
        raise DomainError(f"roots live on u <= 0, got {u!r}")
    cq_val = (1.0 - u) ** (-1.0 / p)
    sq_val = (u / (u - 1.0)) ** (1.0 / p) if u != 0.0 else 0.0
    return cq_val, sq_val


def critical_value(params: SquigParams) -> float:
    """Maximum of cq^m sq^n on the first quadrant, in closed form.

    The derivative factors as cq^(m-1) sq^(n-1) (n cq^p - m sq^p), so the
    interior critical point has sq^p = n / (m + n), cq^p = m / (m + n) and
    the maximum equals (m^m n^n / (m + n)^(m + n))^(1/p).  Requires
    m, n >= 1.
    """
    if params.m < 1 or params.n < 1:
        raise ParameterError("critical_value needs m, n >= 1")
    p, m, n = params.p, params.m, params.n
    return float(Fraction(m ** m * n ** n, (m + n) ** (m + n))) ** (1.0 / p)
