"""Factor sequences between successive MacLaurin terms and the evaluation
schemes they induce.

Writing the MacLaurin series of cq^m * sq^n as t^n sum_j (-1)^j b_j with
b_0 = 1, each scaled term is a fixed multiple of its predecessor:

    a_j = F_j / (F_(j-1) * (n + pj)(n + pj - 1)...(n + pj - p + 1)),
    b_j = a_j t^p b_(j-1),

where F_j are the exact integer numerators.  The a_j are rationals with small
height compared to the F_j and carry the full series: partial products of the
a_j against the factorial grid reconstruct every F_j exactly.

Two evaluation schemes follow.  The factorial-type scheme multiplies terms
one factor a_j t^p at a time and stops when the next update falls below a
tolerance.  The continued-fraction scheme folds the same terms bottom-up
through the algebraic identity that turns an alternating series with term
ratios a_j t^p into

    t^n / (1 + a_1 t^p / (1 - a_1 t^p + a_2 t^p / (1 - a_2 t^p + ... ))),

truncated by dropping the + a_(D+1) t^p / ... tail at depth D; the depth-D
fraction equals the partial sum through term D identically.  An equivalence
transform clears the rationals, giving levels with integer coefficients
built from the F_j and falling factorials of the power grid.

The tail ratio a_(j+1) / a_j tends to (4 cos(pi/p) / pi_p)^p, which inverts
to the quarter-period estimate pi ~ pi_from_factors(a_J, p) used to seed the
constants module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConvergenceError, ParameterError, ZeroDenominatorError
from .triangle import SquigParams, falling_factorial


@dataclass(frozen=True)
class FactorSequence:
    """Term-to-term factors a_0..a_J of a MacLaurin table, exact and binary64.

    a_0 is the leading scaled coefficient F_0 / n! (always 1); for j >= 1,
    term j of the series equals term j - 1 times -a_j t^p.
    """

    params: SquigParams
    J: int
    exact: tuple[Fraction, ...]
    floats: tuple[float, ...]


def factor_sequence(numerators: tuple[int, ...], params: SquigParams) -> FactorSequence:
    """Exact factor sequence from integer MacLaurin numerators.

    Parameters
    ----------
    numerators : tuple[int, ...]
        F_0..F_J as produced by integer_maclaurin.
    params : SquigParams
        The triple the numerators belong to; m, n >= 0.

    Examples
    --------
    >>> from .series import integer_maclaurin
    >>> prm = SquigParams(p=4, m=1, n=0)
    >>> fs = factor_sequence(integer_maclaurin(prm, 3), prm)
    >>> [str(a) for a in fs.exact]
    ['1', '1/4', '9/40', '149/540']
    """
    if params.m < 0 or params.n < 0:
        raise ParameterError("factor sequences need m, n >= 0")
    if not numerators:
        raise ParameterError("need at least F_0")
    p, n = params.p, params.n
    exact = [Fraction(numerators[0], math.factorial(n))]
    for j in range(1, len(numerators)):
        denom = numerators[j - 1] * falling_factorial(n + p * j, p)
        exact.append(Fraction(numerators[j], denom))
    return FactorSequence(
        params=params,
        J=len(numerators) - 1,
        exact=tuple(exact),
        floats=tuple(float(a) for a in exact),
    )


def eval_factor_expansion(fs: FactorSequence, t: float, epsilon: float) -> tuple[float, int]:
    """Sum the series by running term products; returns (value, terms used).

    Terms are accumulated while updates stay at or above epsilon in absolute
    value; the first update below epsilon is dropped and iteration stops, so
    t = 0 uses exactly one term.  Raises ConvergenceError if the available
    factors run out before an update falls below epsilon.
    """
    if not epsilon > 0.0:
        raise ParameterError(f"epsilon must be positive, got {epsilon!r}")
    term = float(t) ** fs.params.n
    total = term
    used = 1
    tp = float(t) ** fs.params.p
    for j in range(1, fs.J + 1):
        term = -fs.floats[j] * tp * term
        if abs(term) < epsilon:
            return total, used
        total += term
        used += 1
    raise ConvergenceError(
        f"factor expansion still above epsilon={epsilon} after {fs.J + 1} terms at t={t}"
    )


def continued_fraction(fs: FactorSequence, t: float, depth: int) -> float:
    """Evaluate the depth-D continued fraction; equals the partial sum 0..D.

    depth = 0 returns t^n.  Denominators are folded bottom-up; a vanishing
    denominator raises ZeroDenominatorError naming the level.
    """
    if not isinstance(depth, int) or depth < 0 or depth > fs.J:
        raise ParameterError(f"depth must be an int in [0, {fs.J}], got {depth!r}")
    tn = float(t) ** fs.params.n
    if depth == 0:
        return tn
    tp = float(t) ** fs.params.p
    v = 1.0 - fs.floats[depth] * tp
    for j in range(depth - 1, 0, -1):
        if v == 0.0:
            raise ZeroDenominatorError(f"denominator vanished at level {j + 1}, t={t}")
        v = 1.0 - fs.floats[j] * tp + fs.floats[j + 1] * tp / v
    if v == 0.0:
        raise ZeroDenominatorError(f"denominator vanished at level 1, t={t}")
    w = 1.0 + fs.floats[1] * tp / v
    if w == 0.0:
        raise ZeroDenominatorError(f"denominator vanished at level 0, t={t}")
    return tn / w


def integer_cf_terms(
    numerators: tuple[int, ...], params: SquigParams
) -> tuple[tuple[int, int], list[tuple[int, int, int]]]:
    """Integer-coefficient continued fraction via an equivalence transform.

    Clearing each rational a_j from the raw fraction multiplies numerator and
    denominator of each level by factorial-grid integers, leaving

        F_0 t^n / (n! + N_1 t^p / (C_1 - F_1 t^p + N_2 t^p / (C_2 - F_2 t^p + ...)))

    with N_1 = F_1 n!, N_j = F_(j-2) F_j ff(n + p(j-1), p) for j >= 2 and
    C_j = F_(j-1) ff(n + pj, p), ff the falling factorial.  Returns
    ((F_0, n!), levels) with levels[j-1] = (N_j, C_j, F_j); the value of the
    depth-D fraction matches continued_fraction at the same depth.

    For p = 2, m = 0, n = 1 every F_j is 1 and the levels collapse to the
    classical fraction t / (1 + t^2 / (6 - t^2 + 6 t^2 / (20 - t^2 + ...))).
    """
    if params.m < 0 or params.n < 0:
        raise ParameterError("integer continued fractions need m, n >= 0")
    if not numerators:
        raise ParameterError("need at least F_0")
    p, n = params.p, params.n
    lead = (numerators[0], math.factorial(n))
    levels: list[tuple[int, int, int]] = []
    for j in range(1, len(numerators)):
        if j == 1:
            numer = numerators[1] * math.factorial(n)
        else:
            numer = numerators[j - 2] * numerators[j] * falling_factorial(n + p * (j - 1), p)
        const = numerators[j - 1] * falling_factorial(n + p * j, p)
        levels.append((numer, const, numerators[j]))
    return lead, levels


def evaluate_integer_cf(
    lead: tuple[int, int],
    levels: list[tuple[int, int, int]],
    params: SquigParams,
    t: float,
    depth: int,
) -> float:
    """Evaluate the integer-coefficient fraction truncated at a given depth.

    Coefficients grow factorially with level, so this evaluator is meant for
    the modest depths where the integer form is of interest; levels beyond
    binary64 range raise OverflowError from the conversion.
    """
    if not isinstance(depth, int) or depth < 0 or depth > len(levels):
        raise ParameterError(f"depth must be an int in [0, {len(levels)}], got {depth!r}")
    tn = float(t) ** params.n
    if depth == 0:
        return lead[0] * tn / lead[1]
    tp = float(t) ** params.p
    numer_d, const_d, sub_d = levels[depth - 1]
    v = const_d - sub_d * tp
    for j in range(depth - 1, 0, -1):
        if v == 0.0:
            raise ZeroDenominatorError(f"denominator vanished at level {j + 1}, t={t}")
        numer_next = levels[j][0]
        numer_j, const_j, sub_j = levels[j - 1]
        v = const_j - sub_j * tp + numer_next * tp / v
    if v == 0.0:
        raise ZeroDenominatorError(f"denominator vanished at level 1, t={t}")
    w = lead[1] + levels[0][0] * tp / v
    if w == 0.0:
        raise ZeroDenominatorError(f"denominator vanished at level 0, t={t}")
    return lead[0] * tn / w


def pi_from_factors(a_tail: float | Fraction, p: int) -> float:
    """Quarter-period estimate from one tail factor: 4 cos(pi/p) a^(-1/p).

    The factor ratio approaches (4 cos(pi/p) / pi_p)^p, so a deep factor a_J
    inverts to an estimate of pi_p; dividing by 4 gives the quarter period.
    The identity degenerates at p = 2 (cos(pi/2) = 0 against a divergent
    power), where the estimate collapses to 0 and is unusable.
    """
    if not isinstance(p, int) or p < 2:
        raise ParameterError(f"p must be an int >= 2, got {p!r}")
    a = float(a_tail)
    if not a > 0.0:
        raise ParameterError(f"tail factor must be positive, got {a_tail!r}")
    return 4.0 * math.cos(math.pi / p) * a ** (-1.0 / p)
