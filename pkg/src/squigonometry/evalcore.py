"""Floating-point evaluation of squigonometric functions on the real line.

An EvalContext bundles everything evaluation needs for one circle degree p:
the quarter period pi_p / 4, MacLaurin tables for sq (m=0, n=1) and cq
(m=1, n=0) sized so the dropped tail is below the context tolerance on the
reduced interval, and the tolerance itself.

Evaluation at arbitrary t proceeds by range reduction.  sq and cq are
2 pi_p periodic, odd and even respectively, satisfy the half-period flips
sq(t + pi_p) = -sq(t), cq(t + pi_p) = -cq(t), and reflect across the quarter
period through the cofunction identity cq(t) = sq(pi_p / 2 - t).  Composing
these folds any real t onto [0, pi_p / 4] together with a choice of table
(sq or co-sq) and two signs; on the reduced interval both series converge
with strictly decreasing terms, and the sparse Horner form evaluates each
table with one multiply-add per stored coefficient.

arcsq_oracle inverts sq independently of the series machinery by integrating

    arcsq(x) = integral_0^x (1 - u^p)^(1/p - 1) du,

with adaptive Gauss-Legendre panels away from u = 1 and a double-exponential
(tanh-sinh) rule across the algebraic endpoint singularity.  It exists to
cross-check the series path, so it shares no tables or constants with it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError, DomainError, ParameterError
from .series import EPS_DEFAULT, MacLaurinTable, maclaurin
from .triangle import SquigParams


@dataclass(frozen=True)
class EvalContext:
    """Evaluation bundle for one circle degree: tables, quarter period, tolerance."""

    p: int
    quarter: float
    sq_table: MacLaurinTable
    cq_table: MacLaurinTable
    epsilon: float

    @property
    def pi_p(self) -> float:
        return 4.0 * self.quarter


@dataclass(frozen=True)
class QuadrantReduction:
    """Result of folding t onto the first half-quadrant.

    value(t) = sign * table(t_reduced) where table is the sq table when
    use_co is False and the cq table when it is True (and the other way
    around for cq evaluation, whose sign is sign_cq).
    """

    t_reduced: float
    use_co: bool
    sign_sq: int
    sign_cq: int


def build_context(p: int, epsilon: float = EPS_DEFAULT, J: int | None = None) -> EvalContext:
    """Build the evaluation context for circle degree p.

    The quarter period and the table length come from the constants module
    (imported lazily; constants itself evaluates through contexts it builds
    by hand during bootstrap).  J overrides the table length when given.
    """
    if not isinstance(p, int) or p < 2:
        raise ParameterError(f"p must be an int >= 2, got {p!r}")
    if not 0.0 < epsilon < 1.0:
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon!r}")
    from .constants import compute_pi

    record = compute_pi(p, epsilon)
    length = record.J_used if J is None else J
    if not isinstance(length, int) or length < 1:
        raise ParameterError(f"table length must be an int >= 1, got {length!r}")
    return EvalContext(
        p=p,
        quarter=record.value / 4.0,
        sq_table=maclaurin(SquigParams(p=p, m=0, n=1), length),
        cq_table=maclaurin(SquigParams(p=p, m=1, n=0), length),
        epsilon=epsilon,
    )


def reduce_argument(ctx: EvalContext, t: float) -> QuadrantReduction:
    """Fold t onto [0, pi_p / 4] tracking table choice and signs.

    Reduction steps, applied in order: take t mod 2 pi_p into [0, 2 pi_p);
    subtract pi_p (flipping both signs) to reach [0, pi_p); reflect across
    pi_p / 2 (flipping the cq sign) to reach [0, pi_p / 2]; reflect across
    pi_p / 4 swapping the roles of the two tables.  Arguments that are exact
    binary64 sums t0 + 2 k pi_p reduce to bit-identical t_reduced.
    """
    if not math.isfinite(t):
        raise DomainError(f"argument must be finite, got {t!r}")
    pi_p = ctx.pi_p
    half = ctx.quarter * 2.0
    s = math.fmod(t, 2.0 * pi_p)
    if s < 0.0:
        s += 2.0 * pi_p
    sign_sq = 1
    sign_cq = 1
    if s >= pi_p:
        s -= pi_p
        sign_sq = -sign_sq
        sign_cq = -sign_cq
    if s > half:
        s = pi_p - s
        sign_cq = -sign_cq
    use_co = s > ctx.quarter
    if use_co:
        s = half - s
    return QuadrantReduction(t_reduced=s, use_co=use_co, sign_sq=sign_sq, sign_cq=sign_cq)


def horner_sparse(table: MacLaurinTable, t: float) -> float:
    """Evaluate a MacLaurin table at t by Horner steps in t^p.

    Folds coefficients from the deep end, b <- a_j - b t^p, so the alternating
    signs come out of the single subtraction, then scales by t^n.
    """
    tp = float(t) ** table.params.p
    b = table.floats[table.J]
    for j in range(table.J - 1, -1, -1):
        b = table.floats[j] - b * tp
    return float(t) ** table.params.n * b


def sq(ctx: EvalContext, t: float) -> float:
    """Squine of t: y-coordinate on |x|^p + |y|^p = 1 at arc parameter t."""
    red = reduce_argument(ctx, t)
    table = ctx.cq_table if red.use_co else ctx.sq_table
    return red.sign_sq * horner_sparse(table, red.t_reduced)


def cq(ctx: EvalContext, t: float) -> float:
    """Cosquine of t: x-coordinate on |x|^p + |y|^p = 1 at arc parameter t."""
    red = reduce_argument(ctx, t)
    table = ctx.sq_table if red.use_co else ctx.cq_table
    return red.sign_cq * horner_sparse(table, red.t_reduced)


def pow_general(ctx: EvalContext, m: int, n: int, t: float) -> float:
    """cq^m(t) * sq^n(t) with domain guards for negative powers.

    For m, n >= 0 and even p the product is entire in the reduced sense and
    any finite t is accepted.  Negative powers (tangent-type quotients) and
    odd p restrict t to the open first quadrant (0, pi_p / 2), where both
    factors are positive; the endpoints are poles or reflection boundaries
    and raise DomainError.
    """
    if not isinstance(m, int) or not isinstance(n, int):
        raise ParameterError(f"powers must be ints, got m={m!r}, n={n!r}")
    if m >= 0 and n >= 0 and ctx.p % 2 == 0:
        return cq(ctx, t) ** m * sq(ctx, t) ** n
    if not 0.0 < t < 2.0 * ctx.quarter:
        raise DomainError(
            f"t={t!r} outside the open first quadrant (0, {2.0 * ctx.quarter}) "
            "required for negative powers or odd p"
        )
    return cq(ctx, t) ** m * sq(ctx, t) ** n


# ---------------------------------------------------------------------------
# Independent quadrature oracle for arcsq.

@lru_cache(maxsize=None)
def _legendre_rule(order: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    # Gauss-Legendre nodes/weights on [-1, 1] by Newton on the three-term
    # recurrence from Chebyshev-angle starting guesses.
    nodes: list[float] = []
    weights: list[float] = []
    for i in range(1, order + 1):
        x = math.cos(math.pi * (i - 0.25) / (order + 0.5))
        dpk = 0.0
        for _ in range(64):
            pk_prev, pk = 1.0, x
            for k in range(2, order + 1):
                pk_prev, pk = pk, ((2 * k - 1) * x * pk - (k - 1) * pk_prev) / k
            dpk = order * (x * pk - pk_prev) / (x * x - 1.0)
            dx = pk / dpk
            x -= dx
            if abs(dx) < 1e-15:
                break
        nodes.append(x)
        weights.append(2.0 / ((1.0 - x * x) * dpk * dpk))
    return tuple(nodes), tuple(weights)


def _gauss_panel(f, a: float, b: float, rule) -> float:
    nodes, weights = rule
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    return h * math.fsum(w * f(c + h * x) for x, w in zip(nodes, weights))


def _integrate_smooth(f, a: float, b: float, tol: float) -> float:
    # Adaptive bisection, accepting a panel when the 15-point and 7-point
    # Gauss answers agree to the panel's share of the tolerance.
    if b <= a:
        return 0.0
    rule7 = _legendre_rule(7)
    rule15 = _legendre_rule(15)
    total = 0.0
    stack = [(a, b, tol)]
    panels = 0
    while stack:
        a0, b0, share = stack.pop()
        panels += 1
        if panels > 10_000:
            raise ConvergenceError("adaptive quadrature exceeded its panel budget")
        hi = _gauss_panel(f, a0, b0, rule15)
        lo = _gauss_panel(f, a0, b0, rule7)
        if abs(hi - lo) <= share or (b0 - a0) <= 16.0 * math.ulp(max(abs(a0), abs(b0), 1.0)):
            total += hi
        else:
            mid = 0.5 * (a0 + b0)
            stack.append((a0, mid, 0.5 * share))
            stack.append((mid, b0, 0.5 * share))
    return total


def _integrate_endpoint(p: int, a: float, b: float, tol: float) -> float:
    # Tanh-sinh rule for integral_a^b (1 - u^p)^(1/p - 1) du, allowing an
    # algebraic singularity at u = b = 1.  The substitution keeps the exact
    # distance to b, so 1 - u^p is formed as (1 - u)(1 + u + ... + u^(p-1))
    # without cancellation.
    if b <= a:
        return 0.0
    half = 0.5 * (b - a)
    gap = 1.0 - b  # zero when the singular endpoint is included
    exponent = 1.0 / p - 1.0

    def node(tau: float) -> float:
        g = 0.5 * math.pi * math.sinh(tau)
        e = math.exp(-2.0 * abs(g))
        sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e))
        if g >= 0.0:
            dist = half * 2.0 * e / (1.0 + e)
        else:
            dist = half * 2.0 / (1.0 + e)
        if dist == 0.0:
            return 0.0
        u = b - dist
        s = gap + dist  # exact-ish 1 - u
        geom = 0.0
        upow = 1.0
        for _ in range(p):
            geom += upow
            upow *= u
        weight = half * 0.5 * math.pi * math.cosh(tau) * sech2
        return weight * (s * geom) ** exponent

    previous = None
    h = 1.0
    for _ in range(10):
        acc = node(0.0)
        k = 1
        tiny = 0
        while k * h <= 7.0:
            contribution = node(k * h) + node(-k * h)
            acc += contribution
            if abs(contribution) < tol * 1e-4:
                tiny += 1
                if tiny >= 2:
                    break
            else:
                tiny = 0
            k += 1
        current = h * acc
        if previous is not None and abs(current - previous) <= 0.25 * tol:
            return current
        previous = current
        h *= 0.5
    raise ConvergenceError(f"tanh-sinh levels exhausted on [{a}, {b}] at tol={tol}")


def arcsq_oracle(x: float, p: int, tol: float = 1e-12) -> float:
    """Inverse squine by direct quadrature of (1 - u^p)^(1/p - 1) on [0, x].

    Built as an independent cross-check of the series evaluators: adaptive
    Gauss-Legendre panels handle [0, min(x, 7/8)] and a tanh-sinh rule the
    remainder, each to half the tolerance.  Accepts 0 <= x <= 1; x = 1
    returns the quarter-period integral in full.
    """
    if not isinstance(p, int) or p < 2:
        raise ParameterError(f"p must be an int >= 2, got {p!r}")
    if not tol > 0.0:
        raise ParameterError(f"tol must be positive, got {tol!r}")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"arcsq needs 0 <= x <= 1, got {x!r}")
    if x == 0.0:
        return 0.0
    split = min(x, 0.875)

    def integrand(u: float) -> float:
        return (1.0 - u ** p) ** (1.0 / p - 1.0)

    total = _integrate_smooth(integrand, 0.0, split, 0.5 * tol)
    if x > split:
        total += _integrate_endpoint(p, split, x, 0.5 * tol)
    return total
