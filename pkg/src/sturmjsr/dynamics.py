"""Induced interval dynamics of a concave-convex matrix pair.

A positive matrix A acts on the projective line, coordinatized on [0, 1], by
the Moebius map T_A(x) = ((a-b)x + b) / (alpha x + b + d) with image
X_A = [b/(b+d), a/(a+c)] and inverse S_A.  For a concave-convex pair the two
inverses assemble into the expanding two-branch map of the system,

    T(x) = S_{A0}(x) on X0,   T(x) = S_{A1}(x) on X1,

whose invariant measures carry the optimization: the scaled pair's induced
function is f(x) = log(det A_i / (-alpha_i (x + sigma_i))) plus log t on the
X1 branch, and the top ergodic average of f equals the log of the joint
spectral radius.

Sturmian intervals are parametrized by their common image point c in [0, 1]:
the interval with coordinate c is [T_{A0}(c), T_{A0}(1)] u [T_{A1}(0),
T_{A1}(c)], and its hybrid contraction applies the symbol-1 branch left of c
and the symbol-0 branch from c on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .classify import in_class_C
from .errors import DomainError, EmptyWord, NoConvergence, NonPositiveScale, NotInClassC
from .matrices import Matrix2, MatrixPair, ProjectiveData, projective_data, require_positive
from .scalar import Number

# Interval membership on the float path inflates endpoints by this much so
# endpoint orbits classify stably.
MEMBER_TOL = 1e-12


@dataclass(frozen=True)
class Interval:
    """Closed subinterval of [0, 1]."""

    lo: Number
    hi: Number

    def __post_init__(self):
        if not (0 <= self.lo <= self.hi <= 1):
            raise DomainError(f"not a subinterval of [0,1]: [{self.lo}, {self.hi}]")

    def contains(self, x: Number, tol: float = MEMBER_TOL) -> bool:
        return float(self.lo) - tol <= float(x) <= float(self.hi) + tol

    def length(self) -> Number:
        return self.hi - self.lo

    def grid(self, n: int) -> list[float]:
        lo, hi = float(self.lo), float(self.hi)
        if n == 1:
            return [(lo + hi) / 2]
        return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


@dataclass(frozen=True)
class InducedSystem:
    """A concave-convex pair with its scale, branch images, and projective data."""

    pair: MatrixPair
    t: Number
    X0: Interval
    X1: Interval
    proj0: ProjectiveData
    proj1: ProjectiveData


@dataclass(frozen=True)
class SturmianIntervalSpec:
    """Two-piece geometry of the Sturmian interval with image coordinate c.

    The degenerate singleton piece at c = 0 or c = 1 is dropped, identifying
    the extremal intervals with X0 and X1 respectively.
    """

    c: Number
    piece0: Optional[Interval]
    piece1: Optional[Interval]


def induced_map_eval(A: Matrix2, x: Number) -> Number:
    """T_A(x) = ((a-b)x + b) / (alpha x + b + d) for x in [0, 1]."""
    require_positive(A)
    if not (-MEMBER_TOL <= float(x) <= 1 + MEMBER_TOL):
        raise DomainError(f"x = {x} outside [0, 1]")
    a, b, c, d = A.entries()
    return ((a - b) * x + b) / ((a + c - b - d) * x + b + d)


def induced_image(A: Matrix2) -> Interval:
    """X_A = [b/(b+d), a/(a+c)]."""
    a, b, c, d = A.entries()
    return Interval(b / (b + d), a / (a + c))


def induced_inverse_eval(A: Matrix2, x: Number) -> Number:
    """S_A(x) = ((b+d)x - b) / (-alpha x + a - b), inverse of T_A on X_A."""
    require_positive(A)
    if not induced_image(A).contains(x):
        raise DomainError(f"x = {x} outside the induced image {induced_image(A)}")
    a, b, c, d = A.entries()
    return ((b + d) * x - b) / (-(a + c - b - d) * x + a - b)


def induced_system(pair: MatrixPair, t: Number = 1) -> InducedSystem:
    """Build the two-branch system; identical for every positive t."""
    if not t > 0:
        raise NonPositiveScale(f"t must be positive, got {t}")
    report = in_class_C(pair)
    if not report.in_C:
        raise NotInClassC(f"pair is not concave-convex: margins {report.inequality_margins}")
    X0 = induced_image(pair.A0)
    X1 = induced_image(pair.A1)
    return InducedSystem(
        pair=pair,
        t=t,
        X0=X0,
        X1=X1,
        proj0=projective_data(pair.A0),
        proj1=projective_data(pair.A1),
    )


def branch_of(sys: InducedSystem, x: Number, tol: float = MEMBER_TOL) -> Optional[int]:
    """0 or 1 for the branch interval containing x, None in the gap or outside."""
    if sys.X0.contains(x, tol):
        return 0
    if sys.X1.contains(x, tol):
        return 1
    return None


def f_eval(sys: InducedSystem, x: Number) -> float:
    """Induced function of the scaled pair at x in X0 u X1.

    On the X0 branch this is log(det A0 / (-alpha0 (x + sigma0))); on the X1
    branch the same formula for A1 plus log t.
    """
    i = branch_of(sys, x)
    if i is None:
        raise DomainError(f"x = {x} lies in the gap or outside [0, 1]")
    A = sys.pair.A0 if i == 0 else sys.pair.A1
    proj = sys.proj0 if i == 0 else sys.proj1
    ratio = A.det() / (-proj.alpha * (x + proj.sigma))
    val = math.log(float(ratio))
    if i == 1:
        val += math.log(float(sys.t))
    return val


def f_prime_sup(sys: InducedSystem) -> float:
    """Supremum of |f'| = 1/|x + sigma_i| over the branch intervals.

    On X0 the factor x + sigma0 is negative and closest to zero at the right
    endpoint; on X1 it is positive and smallest at the left endpoint.
    """
    s0 = abs(float(sys.X0.hi + sys.proj0.sigma))
    s1 = abs(float(sys.X1.lo + sys.proj1.sigma))
    return max(1.0 / s0, 1.0 / s1)


def apply_T(sys: InducedSystem, x: Number) -> Number:
    """One step of the expanding two-branch map."""
    i = branch_of(sys, x)
    if i is None:
        raise DomainError(f"x = {x} has no branch")
    A = sys.pair.A0 if i == 0 else sys.pair.A1
    a, b, c, d = A.entries()
    return ((b + d) * x - b) / (-(a + c - b - d) * x + a - b)


def itinerary(sys: InducedSystem, x: Number, n: int) -> tuple[str, Optional[int]]:
    """Symbol sequence of the orbit of x, stopping at the first escape.

    Returns (word, escaped_at); escaped_at is the step index at which the
    orbit entered the gap or left [0, 1], or None if all n symbols exist.
    """
    if not (-MEMBER_TOL <= float(x) <= 1 + MEMBER_TOL):
        raise DomainError(f"x = {x} outside [0, 1]")
    symbols: list[str] = []
    for j in range(n):
        i = branch_of(sys, x)
        if i is None:
            return "".join(symbols), j
        symbols.append(str(i))
        x = apply_T(sys, x)
        if not (-MEMBER_TOL <= float(x) <= 1 + MEMBER_TOL):
            return "".join(symbols), j + 1
    return "".join(symbols), None


def contraction_eval(sys: InducedSystem, i: int, x: Number) -> Number:
    """The contracting branch T_{A_i} evaluated at x in [0, 1]."""
    A = sys.pair.A0 if i == 0 else sys.pair.A1
    a, b, c, d = A.entries()
    return ((a - b) * x + b) / ((a + c - b - d) * x + b + d)


def periodic_point(sys: InducedSystem, word: str) -> float:
    """Fixed point of the composed contraction T_{A_{w1}} o ... o T_{A_{wn}}.

    Equals the induced fixed point of the product matrix A(word).  Found by
    iterating the composition from 1/2 until successive values differ by
    less than 1e-14, capped at 10000 rounds.
    """
    if not word:
        raise EmptyWord("periodic point needs a non-empty word")
    branches = [int(ch) for ch in word]
    x = 0.5
    for _ in range(10000):
        y = x
        for i in reversed(branches):
            y = float(contraction_eval(sys, i, y))
        if abs(y - x) < 1e-14:
            return y
        x = y
    raise NoConvergence(f"periodic point iteration did not converge for {word!r}")


def hybrid_contraction_eval(sys: InducedSystem, c: Number, x: Number) -> Number:
    """Hybrid contraction of the Sturmian interval with coordinate c.

    Applies the symbol-1 branch on [0, c) and the symbol-0 branch on [c, 1];
    its image is exactly the Sturmian interval.
    """
    if not (0 <= float(c) <= 1) or not (0 <= float(x) <= 1):
        raise DomainError("c and x must lie in [0, 1]")
    return contraction_eval(sys, 1 if x < c else 0, x)


def sturmian_interval_endpoints(sys: InducedSystem, c: Number) -> SturmianIntervalSpec:
    """Both pieces of the Sturmian interval with image coordinate c."""
    if not (0 <= float(c) <= 1):
        raise DomainError(f"c = {c} outside [0, 1]")
    piece0 = None if float(c) == 1.0 else Interval(contraction_eval(sys, 0, c), sys.X0.hi)
    piece1 = None if float(c) == 0.0 else Interval(sys.X1.lo, contraction_eval(sys, 1, c))
    return SturmianIntervalSpec(c=c, piece0=piece0, piece1=piece1)
