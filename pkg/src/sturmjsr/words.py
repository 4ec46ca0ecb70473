"""Balanced binary words, mechanical words, and rational bracketing.

The mechanical word of a reduced rational p/q is the length-q word with
k-th letter floor((k+1)p/q) - floor(kp/q); it has exactly p ones, and its
cyclic rotations generate the periodic orbit whose invariant measure has
parameter p/q.  Bracketing an unknown parameter from an itinerary prefix
descends the Stern-Brocot tree, comparing periodic orbit extremes against
the two one-letter extensions of the prefix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, EmptyWord, PrefixTooShort
from .dynamics import InducedSystem, periodic_point


@dataclass(frozen=True)
class RationalParameter:
    """Reduced fraction p/q with 0 <= p <= q, the frequency of symbol 1."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or not (0 <= self.p <= self.q):
            raise DomainError(f"parameter must satisfy 0 <= p <= q, q >= 1: {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"parameter must be in lowest terms: {self.p}/{self.q}")

    @classmethod
    def from_fraction(cls, x: Fraction) -> "RationalParameter":
        return cls(x.numerator, x.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class ParameterBracket:
    """Rational bracket around a parameter; exact is set when it collapsed."""

    lower: RationalParameter
    upper: RationalParameter
    exact: Optional[RationalParameter] = None

    def width(self) -> Fraction:
        return self.upper.as_fraction() - self.lower.as_fraction()


def mechanical_word(param: RationalParameter) -> str:
    """Lower mechanical word of slope p/q with intercept zero."""
    p, q = param.p, param.q
    return "".join(str((k + 1) * p // q - k * p // q) for k in range(q))


def is_balanced(word: str) -> bool:
    """Whether the bi-infinite periodic extension of the word is balanced.

    Balanced means that for every length, the numbers of ones in any two
    factors of that length differ by at most one.  For a period-q word it
    suffices to check factor lengths below q.
    """
    if not word:
        raise EmptyWord("balance test needs a non-empty word")
    n = len(word)
    doubled = word + word
    ones = [0] * (2 * n + 1)
    for i, ch in enumerate(doubled):
        ones[i + 1] = ones[i] + (ch == "1")
    for length in range(1, n):
        counts = [ones[i + length] - ones[i] for i in range(n)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def rotations(word: str) -> list[str]:
    return [word[i:] + word[:i] for i in range(len(word))]


def orbit_min_max(param: RationalParameter) -> tuple[str, str]:
    """Lexicographically least and greatest rotations of the mechanical word."""
    rots = rotations(mechanical_word(param))
    return min(rots), max(rots)


def _cmp_periodic_vs_prefix(periodic: str, prefix: str) -> int:
    """Lexicographic comparison of periodic^inf against a finite word.

    A difference anywhere in the available prefix decides the comparison.
    Agreement through the whole prefix counts as equality only when the
    prefix covers at least three periods; with less evidence the outcome
    could flip on a longer itinerary, so it raises instead of guessing.
    """
    q = len(periodic)
    for i in range(len(prefix)):
        a, b = periodic[i % q], prefix[i]
        if a != b:
            return 1 if a > b else -1
    if len(prefix) >= 3 * q:
        return 0
    raise PrefixTooShort(
        f"comparison undecided after {len(prefix)} letters; lengthen the itinerary"
    )


def parameter_from_itinerary(omega_prefix: str, depth: int = 64) -> ParameterBracket:
    """Bracket the parameter of the Sturmian interval [0w, 1w] from a prefix of w.

    Stern-Brocot descent: starting from [0/1, 1/1], test the mediant's
    periodic orbit extremes against the extensions 0w and 1w.  An orbit
    fitting inside [0w, 1w] identifies the parameter exactly; an orbit
    maximum above 1w sends the search left, an orbit minimum below 0w sends
    it right.  After `depth` steps the open bracket is returned.
    """
    if not omega_prefix:
        raise EmptyWord("itinerary prefix must be non-empty")
    if depth < 1:
        raise DomainError("depth must be at least 1")
    seq0 = "0" + omega_prefix
    seq1 = "1" + omega_prefix

    def classify(frac: Fraction) -> int:
        # 0: orbit fits inside [0w, 1w]; +1: sticks out right; -1: left.
        wmin, wmax = orbit_min_max(RationalParameter.from_fraction(frac))
        if _cmp_periodic_vs_prefix(wmax, seq1) > 0:
            return 1
        if _cmp_periodic_vs_prefix(wmin, seq0) < 0:
            return -1
        return 0

    for endpoint in (Fraction(0), Fraction(1)):
        if classify(endpoint) == 0:
            exact = RationalParameter.from_fraction(endpoint)
            return ParameterBracket(exact, exact, exact)

    lo, hi = Fraction(0), Fraction(1)
    for _ in range(depth):
        mediant = Fraction(
            lo.numerator + hi.numerator, lo.denominator + hi.denominator
        )
        side = classify(mediant)
        if side == 0:
            exact = RationalParameter.from_fraction(mediant)
            return ParameterBracket(exact, exact, exact)
        if side > 0:
            hi = mediant
        else:
            lo = mediant
    return ParameterBracket(
        RationalParameter.from_fraction(lo), RationalParameter.from_fraction(hi)
    )


def farey_neighbors(x: Fraction, max_den: int) -> tuple[Fraction, Fraction]:
    """Best rational bounds of x in [0, 1] with denominator at most max_den.

    Returns (x, x) when x itself is representable at that resolution.
    """
    if not (0 <= x <= 1):
        raise DomainError(f"x = {x} outside [0, 1]")
    if max_den < 1:
        raise DomainError("max_den must be at least 1")
    if x.denominator <= max_den:
        return x, x
    lo, hi = Fraction(0), Fraction(1)
    while True:
        mediant = Fraction(lo.numerator + hi.numerator, lo.denominator + hi.denominator)
        if mediant.denominator > max_den:
            return lo, hi
        if mediant < x:
            lo = mediant
        elif mediant > x:
            hi = mediant
        else:
            return mediant, mediant


def sturmian_orbit_points(sys: InducedSystem, param: RationalParameter) -> list[float]:
    """The q points of the periodic orbit with itinerary mechanical_word(param)."""
    return sorted(periodic_point(sys, rot) for rot in rotations(mechanical_word(param)))
