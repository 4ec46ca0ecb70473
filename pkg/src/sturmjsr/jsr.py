"""Brute-force and Sturmian-restricted joint spectral radius estimation.

The log of the joint spectral radius of (A0, t*A1) is the supremum over
finite binary words w of (1/|w|) log r(A_t(w)).  The spectral radius of a
product is a class function of the word's necklace, so the brute force
enumerates one representative per primitive necklace (Lyndon words, via
Duval's generator) instead of all 2^n words.  The ergodic-average route
evaluates the induced function along the periodic orbit of the word and
must agree with the product route; the two sides are kept independent so
each can check the other.

Upper bounds come from the entrywise sum norm, which is submultiplicative,
so every product length yields a valid bound and the minimum over lengths
is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .classify import in_class_C, in_class_D
from .dynamics import InducedSystem, apply_T, f_eval, periodic_point
from .errors import EmptyWord, NonPositiveMatrix, NonPositiveScale, NotInClassC, NotInClassD
from .matrices import MatrixPair, word_value
from .scalar import Number
from .words import RationalParameter, is_balanced, mechanical_word

VALUE_TIE_TOL = 1e-12


@dataclass(frozen=True)
class JsrEstimate:
    """Bracketing estimate of log r for a scaled pair.

    lower is attained by argmax_word; upper, when computed, is the minimum
    over product lengths of the normalized sum-norm bound.
    """

    lower: float
    upper: Optional[float]
    argmax_word: str
    argmax_parameter: Optional[RationalParameter]
    max_length: int


def lyndon_words(max_len: int) -> Iterator[str]:
    """All binary Lyndon words of length <= max_len in lexicographic order.

    Lyndon words are exactly the lexicographically least representatives of
    the primitive necklaces.
    """
    w = [0]
    yield "0"
    while True:
        w = [w[i % len(w)] for i in range(max_len)]
        while w and w[-1] == 1:
            w.pop()
        if not w:
            return
        w[-1] = 1
        yield "".join(map(str, w))


def jsr_lower_bruteforce(
    pair: MatrixPair, t: Number, max_len: int, compute_upper: bool = True
) -> JsrEstimate:
    """Maximize the per-letter log spectral radius over primitive necklaces.

    Ties within 1e-12 go to the lexicographically least representative.
    The parameter field is the reduced letter frequency of the winner when
    that word is balanced, and None otherwise.
    """
    if not (pair.A0.is_positive() and pair.A1.is_positive()):
        raise NonPositiveMatrix("brute force needs positive entries")
    if not t > 0:
        raise NonPositiveScale(f"t must be positive, got {t}")
    if max_len < 1:
        raise EmptyWord("max_len must be at least 1")

    fpair = pair.to_float()
    best_value = -math.inf
    best_word = ""
    for word in lyndon_words(max_len):
        value = word_value(fpair, float(t), word)
        if value > best_value + VALUE_TIE_TOL:
            best_value, best_word = value, word
        elif abs(value - best_value) <= VALUE_TIE_TOL and (
            not best_word or word < best_word
        ):
            best_word = word

    param = None
    if is_balanced(best_word):
        ones = best_word.count("1")
        g = math.gcd(ones, len(best_word))
        param = RationalParameter(ones // g, len(best_word) // g)

    upper = jsr_upper_norm(pair, t, max_len) if compute_upper else None
    return JsrEstimate(
        lower=best_value,
        upper=upper,
        argmax_word=best_word,
        argmax_parameter=param,
        max_length=max_len,
    )


def jsr_upper_norm(pair: MatrixPair, t: Number, max_len: int) -> float:
    """min over n <= max_len of (1/n) log max over |w| = n of the sum norm.

    The entrywise absolute-sum norm is submultiplicative, so every length
    gives a valid upper bound.  Products are kept normalized with an
    accumulated log scale; the level-n population is built from level n-1
    by appending either generator.
    """
    if max_len < 1:
        raise EmptyWord("max_len must be at least 1")
    if not t > 0:
        raise NonPositiveScale(f"t must be positive, got {t}")
    A0 = pair.A0.to_float()
    A1 = pair.A1.to_float().scaled(float(t))
    level = [(A0, 0.0), (A1, 0.0)]
    best = math.inf
    for n in range(1, max_len + 1):
        worst = max(
            math.log(abs(M.a) + abs(M.b) + abs(M.c) + abs(M.d)) + s for M, s in level
        )
        best = min(best, worst / n)
        if n < max_len:
            nxt = []
            for M, s in level:
                for B in (A0, A1):
                    P = M.mul(B)
                    m = P.max_abs_entry()
                    nxt.append((P.scaled(1.0 / m), s + math.log(m)))
            level = nxt
    return best


def sturmian_value(pair: MatrixPair, t: Number, param: RationalParameter) -> float:
    """Per-letter log spectral radius of the mechanical-word product.

    By the ergodic-average identity this equals the integral of the induced
    function of the scaled pair against the Sturmian measure of the given
    parameter.
    """
    if not in_class_C(pair).in_C:
        raise NotInClassC("sturmian values need a concave-convex pair")
    if not t > 0:
        raise NonPositiveScale(f"t must be positive, got {t}")
    return word_value(pair.to_float(), float(t), mechanical_word(param))


def ergodic_average_f(sys: InducedSystem, word: str) -> float:
    """Average of the induced function over the periodic orbit of the word.

    Independent route to the word value: the orbit is found by contraction
    iteration and the induced function is summed along it, never touching
    the matrix product.
    """
    if not word:
        raise EmptyWord("ergodic average needs a non-empty word")
    x = periodic_point(sys, word)
    total = 0.0
    for _ in word:
        total += f_eval(sys, x)
        x = apply_T(sys, x)
    return total / len(word)


def sturmian_restricted_max(
    pair: MatrixPair, t: Number, max_den: int
) -> tuple[RationalParameter, float]:
    """Maximize the Sturmian value over parameters with denominator <= max_den.

    Ties within 1e-12 break toward smaller denominator, then smaller
    numerator.  The restricted maximum converges to log r of the scaled
    pair as the denominator cap grows.
    """
    if not in_class_D(pair).in_D:
        raise NotInClassD("restricted Sturmian search needs the strict cross inequalities")
    if max_den < 1:
        raise EmptyWord("max_den must be at least 1")
    fpair = pair.to_float()
    tf = float(t)
    best: tuple[RationalParameter, float] | None = None
    for q in range(1, max_den + 1):
        for p in range(q + 1):
            if math.gcd(p, q) != 1:
                continue
            param = RationalParameter(p, q)
            value = word_value(fpair, tf, mechanical_word(param))
            if best is None or value > best[1] + VALUE_TIE_TOL:
                best = (param, value)
    assert best is not None
    return best
