"""Scale-to-parameter map, staircase scans, plateaus, and counterexample search.

The parameter map sends a scale t to the frequency of symbol 1 of the
maximizing Sturmian measure of (A0, t*A1).  It is 0 up to the lower
threshold, 1 from the upper threshold on, and a devil's staircase in
between: non-decreasing, constant on a plateau at every rational value,
injective at irrational values.  At a finite denominator cap the map is
computed by restricted Sturmian maximization; each parameter's restricted
plateau contains its true plateau, which is what makes the outer bracket
returned by the counterexample search rigorous at the working resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .certify import Domination, domination_check, thresholds
from .classify import in_class_D
from .errors import DomainError, NotInClassD, PlateauNotFound
from .matrices import MatrixPair, spectral_radius, word_value
from .scalar import Number
from .words import ParameterBracket, RationalParameter, farey_neighbors, mechanical_word

VALUE_TIE_TOL = 1e-12


@dataclass(frozen=True)
class StaircaseSample:
    t: Number
    parameter: RationalParameter
    value: float
    word: str


@dataclass(frozen=True)
class PlateauEstimate:
    parameter: RationalParameter
    t_lo: Number
    t_hi: Number
    resolution: float


@dataclass(frozen=True)
class CounterexampleResult:
    """Scale bracket and parameter bracket around a target parameter.

    When the target is irrational the parameter bracket cannot collapse, the
    scale bracket [t_lo, t_hi] provably contains the preimage of the target,
    and any t in it whose maximizing measure has the target's (irrational)
    parameter makes the scaled pair a finiteness counterexample.
    """

    t: float
    bracket: ParameterBracket
    t_lo: float
    t_hi: float
    interior: bool


@lru_cache(maxsize=32)
def _sturmian_table(
    entries: tuple[float, ...], max_den: int
) -> tuple[tuple[int, int, float, float], ...]:
    """(p, q, value at t = 1, p/q) per reduced parameter, by rising q then p.

    Scaling the convex member by t shifts a word's per-letter value by
    exactly (ones/length) log t, so one table at t = 1 serves every scale.
    """
    from .matrices import Matrix2

    pair = MatrixPair(Matrix2(*entries[:4]), Matrix2(*entries[4:]))
    rows = []
    for q in range(1, max_den + 1):
        for p in range(q + 1):
            if math.gcd(p, q) != 1:
                continue
            word = mechanical_word(RationalParameter(p, q))
            rows.append((p, q, word_value(pair, 1.0, word), p / q))
    return tuple(rows)


def _restricted_argmax(pair: MatrixPair, t: float, max_den: int) -> tuple[RationalParameter, float]:
    key = tuple(float(x) for x in pair.A0.entries() + pair.A1.entries())
    log_t = math.log(t)
    best: tuple[RationalParameter, float] | None = None
    for p, q, base, slope in _sturmian_table(key, max_den):
        value = base + slope * log_t
        if best is None or value > best[1] + VALUE_TIE_TOL:
            best = (RationalParameter(p, q), value)
    assert best is not None
    return best


def parameter_map(pair: MatrixPair, t: Number, max_den: int) -> StaircaseSample:
    """Best Sturmian parameter at scale t, at denominator resolution max_den."""
    if not in_class_D(pair).in_D:
        raise NotInClassD("the parameter map needs the strict cross inequalities")
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    th = thresholds(pair)
    if t <= th.t0:
        param = RationalParameter(0, 1)
        value = math.log(float(spectral_radius(pair.A0.to_float())))
    elif t >= th.t1:
        param = RationalParameter(1, 1)
        value = math.log(float(t)) + math.log(float(spectral_radius(pair.A1.to_float())))
    else:
        param, value = _restricted_argmax(pair, float(t), max_den)
    return StaircaseSample(t=t, parameter=param, value=value, word=mechanical_word(param))


def staircase_scan(
    pair: MatrixPair,
    t_min: Number,
    t_max: Number,
    samples: int,
    max_den: int,
) -> list[StaircaseSample]:
    """Geometrically spaced samples of the parameter map, sorted by t."""
    if not (0 < float(t_min) < float(t_max)):
        raise DomainError("need 0 < t_min < t_max")
    if samples < 2:
        raise DomainError("need at least 2 samples")
    lo, hi = float(t_min), float(t_max)
    ratio = (hi / lo) ** (1.0 / (samples - 1))
    return [parameter_map(pair, lo * ratio**k, max_den) for k in range(samples)]


def _parameter_at(pair: MatrixPair, t: float, max_den: int) -> Fraction:
    return parameter_map(pair, t, max_den).parameter.as_fraction()


def parameter_bracket_of_coordinate(sys, c: Number, depth: int = 64) -> ParameterBracket:
    """Parameter bracket of the Sturmian interval with image coordinate c.

    Follows the orbit of c.  If it escapes the branch intervals, the
    symbolic position at the escape step is bracketed by the padded
    continuations: between w01^inf and w10^inf for an escape into the
    central gap, and w0^inf resp. w1^inf for escapes below the left or
    above the right branch image.  The two padded prefixes are then pushed
    through the usual descent.
    """
    from .dynamics import apply_T, itinerary
    from .words import parameter_from_itinerary

    prefix, escaped = itinerary(sys, c, depth)
    pad = 3 * depth + 8
    if escaped is None:
        return parameter_from_itinerary(prefix, depth)
    x = float(c)
    for _ in range(escaped):
        x = float(apply_T(sys, x))
    if x < float(sys.X0.lo):
        lo_word = hi_word = (prefix + "0" * pad)[:pad]
    elif x > float(sys.X1.hi):
        lo_word = hi_word = (prefix + "1" * pad)[:pad]
    else:
        lo_word = (prefix + "0" + "1" * pad)[:pad]
        hi_word = (prefix + "1" + "0" * pad)[:pad]
    lo = parameter_from_itinerary(lo_word, depth)
    hi = parameter_from_itinerary(hi_word, depth)
    exact = lo.exact if (lo.exact is not None and lo.exact == hi.exact) else None
    return ParameterBracket(lo.lower, hi.upper, exact)


def plateau_bounds(
    pair: MatrixPair,
    param: RationalParameter,
    resolution: float,
    max_den: int,
) -> PlateauEstimate:
    """Scale interval over which the parameter map returns the given value.

    The extremal parameters 0/1 and 1/1 use the closed-form thresholds.  For
    interior parameters a monotone bisection first seeds a scale inside the
    plateau, then refines both edges until the bracket width drops below the
    resolution; the reported endpoints are certified inside the plateau.
    """
    if not resolution > 0:
        raise DomainError("resolution must be positive")
    if not in_class_D(pair).in_D:
        raise NotInClassD("plateau bounds need the strict cross inequalities")
    th = thresholds(pair)
    if param == RationalParameter(0, 1):
        return PlateauEstimate(param, 0, th.t0, resolution)
    if param == RationalParameter(1, 1):
        return PlateauEstimate(param, th.t1, math.inf, resolution)

    target = param.as_fraction()
    lo, hi = float(th.t0), float(th.t1)

    # Seed a scale whose parameter equals the target.
    seed = None
    a, b = lo, hi
    floor = min(resolution, 1e-12)
    while b - a > floor:
        mid = math.sqrt(a * b)
        got = _parameter_at(pair, mid, max_den)
        if got == target:
            seed = mid
            break
        if got < target:
            a = mid
        else:
            b = mid
    if seed is None:
        raise PlateauNotFound(
            f"no scale produced parameter {param} at denominator cap {max_den}"
        )

    a, b = lo, seed  # left edge: parameter below target at a, equal at b
    while b - a > resolution:
        mid = math.sqrt(a * b)
        if _parameter_at(pair, mid, max_den) < target:
            a = mid
        else:
            b = mid
    t_left = b

    a, b = seed, hi  # right edge: equal at a, above target at b
    while b - a > resolution:
        mid = math.sqrt(a * b)
        if _parameter_at(pair, mid, max_den) > target:
            b = mid
        else:
            a = mid
    t_right = a

    return PlateauEstimate(param, t_left, t_right, resolution)


def _monotone_boundary(
    pair: MatrixPair,
    below,
    lo: float,
    hi: float,
    tol: float,
    max_den: int,
) -> tuple[float, float]:
    """Bisect the jump of a monotone predicate on t; returns (last False, first True).

    `below(P)` must be True left of the boundary and False right of it for
    the parameter values P returned along increasing t.
    """
    a, b = lo, hi
    while b - a > tol:
        mid = math.sqrt(a * b)
        if below(_parameter_at(pair, mid, max_den)):
            a = mid
        else:
            b = mid
    return a, b


def counterexample_search(
    pair: MatrixPair,
    target: Number,
    tol: float,
    max_den: int,
) -> CounterexampleResult:
    """Bracket the scale whose maximizing measure has the target parameter.

    The target is bracketed by its best rational neighbors p- < target < p+
    at the denominator cap, and the scale bracket is the closure of
    {t : p- <= parameter_map(t) <= p+}, located by two monotone bisections
    at resolution tol.  Restricted plateaus contain true plateaus, so this
    outer bracket provably contains the preimage of the target, and it
    shrinks as the cap grows because finer neighbors with larger
    denominators have narrower plateaus.  A rational target representable
    at the cap degenerates to its own plateau.
    """
    if not (0 < float(target) < 1):
        raise DomainError(f"target must lie strictly inside (0, 1), got {target}")
    if not tol > 0:
        raise DomainError("tol must be positive")
    if not in_class_D(pair).in_D:
        raise NotInClassD("counterexample search needs the strict cross inequalities")
    frac = target if isinstance(target, Fraction) else Fraction(float(target))
    p_lo, p_hi = farey_neighbors(frac, max_den)
    th = thresholds(pair)
    lo, hi = float(th.t0), float(th.t1)

    if p_lo == p_hi:
        param = RationalParameter.from_fraction(p_lo)
        plat = plateau_bounds(pair, param, tol, max_den)
        t_lo, t_hi = float(plat.t_lo), float(plat.t_hi)
        bracket = ParameterBracket(param, param, param)
    else:
        t_lo, _ = _monotone_boundary(pair, lambda P: P < p_lo, lo, hi, tol, max_den)
        _, t_hi = _monotone_boundary(pair, lambda P: P <= p_hi, lo, hi, tol, max_den)
        bracket = ParameterBracket(
            RationalParameter.from_fraction(p_lo), RationalParameter.from_fraction(p_hi)
        )

    t_mid = math.sqrt(t_lo * t_hi)
    interior = domination_check(pair, t_mid) is Domination.INTERIOR
    return CounterexampleResult(
        t=t_mid, bracket=bracket, t_lo=t_lo, t_hi=t_hi, interior=interior
    )
