import math
import random
from fractions import Fraction as F

import pytest

from sturmjsr import (
    RationalParameter,
    ergodic_average_f,
    induced_system,
    is_balanced,
    jsr_lower_bruteforce,
    jsr_upper_norm,
    sturmian_restricted_max,
    sturmian_value,
)
from sturmjsr.errors import NotInClassD
from sturmjsr.jsr import lyndon_words
from sturmjsr.matrices import word_value


def _necklace_min(word: str) -> str:
    return min(word[i:] + word[:i] for i in range(len(word)))


def _is_primitive(word: str) -> bool:
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word == word[:d] * (n // d):
            return False
    return True


def test_lyndon_enumeration_matches_bruteforce():
    got = sorted(w for w in lyndon_words(9))
    want = set()
    for n in range(1, 10):
        for k in range(2**n):
            w = format(k, f"0{n}b")
            if _is_primitive(w) and w == _necklace_min(w):
                want.add(w)
    assert got == sorted(want)


def test_lyndon_count_through_twelve():
    assert sum(1 for _ in lyndon_words(12)) == 747


def test_bruteforce_dominated_regimes(reference_pair):
    low = jsr_lower_bruteforce(reference_pair, F(1, 4), 12)
    assert low.argmax_word == "0"
    assert abs(low.lower) <= 1e-12
    assert low.argmax_parameter == RationalParameter(0, 1)

    high = jsr_lower_bruteforce(reference_pair, F(8), 12)
    assert high.argmax_word == "1"
    assert abs(high.lower - math.log(8)) <= 1e-12
    assert high.argmax_parameter == RationalParameter(1, 1)


def test_bruteforce_interior_is_balanced(reference_pair):
    est = jsr_lower_bruteforce(reference_pair, F(1), 12)
    assert is_balanced(est.argmax_word)
    assert est.argmax_parameter == RationalParameter(1, 2)


def test_upper_bound_dominates_lower(reference_pair, symmetric_pair):
    for pair, t in ((reference_pair, F(1, 4)), (reference_pair, 1), (symmetric_pair, 2)):
        est = jsr_lower_bruteforce(pair, t, 10)
        assert est.upper is not None and est.lower <= est.upper + 1e-12


def test_upper_bound_gap_shrinks_with_length(reference_pair):
    # Rank-one convergence pins the sum-norm bound near log(3.06)/n here, so
    # the n = 12 gap sits just above 0.09 and halves when n doubles.
    lo12 = jsr_lower_bruteforce(reference_pair, F(1, 4), 12)
    gap12 = lo12.upper - lo12.lower
    assert gap12 <= 0.1
    up6 = jsr_upper_norm(reference_pair, F(1, 4), 6)
    gap6 = up6 - lo12.lower
    assert gap12 < 0.65 * gap6


def test_bounds_monotone_in_length(reference_pair):
    lowers = [jsr_lower_bruteforce(reference_pair, 1, n, compute_upper=False).lower for n in (4, 8, 12)]
    assert lowers[0] <= lowers[1] + 1e-12 and lowers[1] <= lowers[2] + 1e-12
    uppers = [jsr_upper_norm(reference_pair, 1, n) for n in (4, 8, 12)]
    assert uppers[0] >= uppers[1] - 1e-12 and uppers[1] >= uppers[2] - 1e-12


def test_upper_norm_smoke_commuting_like():
    from sturmjsr import d2_pair

    val = jsr_upper_norm(d2_pair(1.0, 1.0), 1, 4)
    assert math.isfinite(val)


def test_sturmian_value_fixed_parameters(reference_pair):
    assert abs(sturmian_value(reference_pair, 1, RationalParameter(0, 1))) <= 1e-14
    assert abs(sturmian_value(reference_pair, 1, RationalParameter(1, 1))) <= 1e-14


def test_sturmian_value_alternating_word(reference_pair):
    # (1/2) log of the larger root of z^2 - tr z + det for the exact product.
    tr, det = F(32707, 14336), F(9, 16) * F(13, 16)
    root = (float(tr) + math.sqrt(float(tr * tr - 4 * det))) / 2
    want = math.log(root) / 2
    got = sturmian_value(reference_pair, 1, RationalParameter(1, 2))
    assert abs(got - want) <= 1e-12


def test_ergodic_average_matches_product_route(reference_pair, symmetric_pair):
    rng = random.Random(51)
    for pair in (reference_pair, symmetric_pair):
        for t in (F(1, 2), F(1), F(3)):
            sys = induced_system(pair, t)
            for _ in range(10):
                n = rng.randint(1, 8)
                word = "".join(rng.choice("01") for _ in range(n))
                assert abs(
                    ergodic_average_f(sys, word) - word_value(pair.to_float(), float(t), word)
                ) <= 1e-10


def test_ergodic_average_unbalanced_word(reference_pair):
    sys = induced_system(reference_pair, F(3, 2))
    got = ergodic_average_f(sys, "0011")
    want = word_value(reference_pair.to_float(), 1.5, "0011")
    assert abs(got - want) <= 1e-10


def test_ergodic_average_single_letters(reference_pair):
    from sturmjsr.certify import fixed_point_f_value

    sys = induced_system(reference_pair, 1)
    assert abs(ergodic_average_f(sys, "0") - fixed_point_f_value(sys, 0)) <= 1e-12
    assert abs(ergodic_average_f(sys, "1") - fixed_point_f_value(sys, 1)) <= 1e-12


def test_restricted_max_regimes(reference_pair):
    p, v = sturmian_restricted_max(reference_pair, F(1, 4), 50)
    assert p == RationalParameter(0, 1) and abs(v) <= 1e-12
    p, v = sturmian_restricted_max(reference_pair, F(8), 50)
    assert p == RationalParameter(1, 1) and abs(v - math.log(8)) <= 1e-12


def test_restricted_max_agrees_with_bruteforce(reference_pair):
    p, _ = sturmian_restricted_max(reference_pair, 1, 50)
    est = jsr_lower_bruteforce(reference_pair, 1, 12, compute_upper=False)
    assert p == est.argmax_parameter


def test_restricted_max_rejects_outside_class():
    from sturmjsr import d2_pair

    with pytest.raises(NotInClassD):
        sturmian_restricted_max(d2_pair(F(1, 2), F(3)), 1, 10)


def test_unbalanced_values_below_sturmian_max(reference_pair):
    for t in (F(1, 2), F(2)):
        fpair = reference_pair.to_float()
        tf = float(t)
        balanced_best = -math.inf
        unbalanced = []
        for word in lyndon_words(12):
            v = word_value(fpair, tf, word)
            if is_balanced(word):
                balanced_best = max(balanced_best, v)
            else:
                unbalanced.append((word, v))
        assert unbalanced
        for word, v in unbalanced:
            assert v < balanced_best, word
