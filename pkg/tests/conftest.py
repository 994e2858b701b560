import random
from fractions import Fraction

import pytest

from extcohom import CohomologyRing, Element, Matrix, heisenberg


@pytest.fixture(scope="session")
def model():
    return heisenberg()


@pytest.fixture(scope="session")
def ring(model):
    return CohomologyRing(model)


@pytest.fixture(scope="session")
def h1(ring):
    x, y = ring.basis_classes(1)
    return x, y


def random_fraction(rng, num_range=10, den_range=10):
    return Fraction(rng.randint(-num_range, num_range), rng.randint(1, den_range))


def random_matrix(rng, rows, cols, num_range=6, den_range=6):
    return Matrix.from_rows(
        [[random_fraction(rng, num_range, den_range) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def random_homogeneous(rng, dga, k):
    """A random degree-k element: random coefficients on the monomial basis."""
    terms = {}
    for mono in dga.basis_monomials(k):
        if rng.random() < 0.7:
            terms[mono] = random_fraction(rng)
    return Element(terms)


def random_element(rng, dga):
    """A random element mixing all degrees 0..n."""
    total = Element.zero()
    for k in range(dga.ngens + 1):
        total = total + random_homogeneous(rng, dga, k)
    return total


def random_class(rng, ring, k=1):
    basis = ring.basis_classes(k)
    cls = ring.zero_class(k)
    for b in basis:
        cls = cls + random_fraction(rng) * b
    return cls


def seeded(name, seed=2026):
    return random.Random(f"{seed}:{name}")
