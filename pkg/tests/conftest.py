import random
from fractions import Fraction

import pytest

from spectral_pairs.rings import PolyRing, TwistedLaurentRing


def random_rational(rng, span=5):
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


def random_poly(ring, rng, max_deg=3, n_terms=4, span=5):
    terms = {}
    for _ in range(n_terms):
        exp = tuple(
            rng.randint(-max_deg, max_deg) if v in ring.laurent
            else rng.randint(0, max_deg)
            for v in ring.variables
        )
        terms[exp] = random_rational(rng, span)
    return ring.from_terms(terms)


def random_twisted(ring, rng):
    out = ring.zero
    for _ in range(3):
        out = out + ring.t_power(
            rng.randint(-3, 3), random_poly(ring.base, rng, max_deg=2, n_terms=2)
        )
    return out


@pytest.fixture
def rng():
    return random.Random(1729)


@pytest.fixture
def xring():
    return PolyRing(("x",))


@pytest.fixture
def tring():
    return TwistedLaurentRing(PolyRing(()))
