import random
from fractions import Fraction as F

import pytest

from sturmjsr import Matrix2, MatrixPair, d2_pair, induced_system


@pytest.fixture(scope="session")
def reference_pair() -> MatrixPair:
    """A pair in the Sturmian class with fully rational derived data.

    Both members have Perron eigenvalue 1; the minor eigenvalues are 9/16
    and 13/16, the thresholds are 24/77 and 61/8.
    """
    return MatrixPair(
        Matrix2(F(5, 8), F(3, 112), F(7, 8), F(15, 16)),
        Matrix2(F(15, 16), F(1), F(1, 128), F(7, 8)),
    )


@pytest.fixture(scope="session")
def symmetric_pair() -> MatrixPair:
    """d2-family member ((1,1/4;3/2,1),(1,3/2;1/4,1)); its gammas are irrational."""
    return d2_pair(F(1, 4), F(3, 2))


@pytest.fixture(scope="session")
def reference_system(reference_pair):
    return induced_system(reference_pair, 1)


@pytest.fixture(scope="session")
def symmetric_system(symmetric_pair):
    return induced_system(symmetric_pair, 1)


def random_positive_matrix(rng: random.Random) -> Matrix2:
    """Entries uniform in [0.1, 10], resampled until the determinant is positive."""
    while True:
        m = Matrix2(*(rng.uniform(0.1, 10.0) for _ in range(4)))
        if m.det() > 0:
            return m


def random_rational(rng: random.Random, lo=1, hi=40) -> F:
    return F(rng.randint(lo, hi), rng.randint(lo, hi))
