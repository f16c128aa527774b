import random

import pytest

from mptutte import (
    GroundSet,
    Matroid,
    Perspective,
    Poly,
    X,
    Y,
    Z,
    free_matroid,
    rank_zero_matroid,
    specialize_m0,
    tutte_activities,
    tutte_bivariate_crapo,
    tutte_bivariate_kochol,
    tutte_compatible,
    tutte_m0_expansion,
    tutte_rank_generating,
    uniform_matroid,
)
from corpus import fixture_matroids, fixture_perspective

FIXTURE_POLY_STR = "x^2*z + x^2 + x*y + 2*x*z + 2*x + y^2 + y*z + 2*y + z + 1"


@pytest.fixture(scope="module")
def fixture():
    return fixture_perspective()


def test_fixture_polynomial_three_ways(fixture):
    a = tutte_activities(fixture)
    c = tutte_compatible(fixture)
    r = tutte_rank_generating(fixture)
    assert str(a) == FIXTURE_POLY_STR
    assert a == c == r


def test_activities_degenerate_perspectives():
    e = GroundSet(1)
    coloop = free_matroid(e)
    assert tutte_activities(Perspective(coloop, coloop)) == X
    loop = rank_zero_matroid(e)
    assert tutte_activities(Perspective(loop, loop)) == Y


def test_compatible_term_examples(fixture):
    # empty set contributes x^r(M') z^(r(M)-r(M')); full set contributes y^r*(M)
    e = fixture.ground
    rq = fixture.quotient.rank()
    assert (rq - fixture.quotient.rank(0), 0 - fixture.matroid.rank(0),
            fixture.rank_defect(0)) == (2, 0, 1)
    full = e.mask
    assert (rq - fixture.quotient.rank(full), 5 - fixture.matroid.rank(full),
            fixture.rank_defect(full)) == (0, 2, 0)


def test_crapo_examples(fixture):
    m, _ = fixture_matroids()
    same = tutte_activities(Perspective(m, m))
    crapo = tutte_bivariate_crapo(m)
    assert crapo == same
    assert crapo.max_z_exponent() == 0
    assert tutte_bivariate_crapo(uniform_matroid(1, GroundSet(2))) == X + Y
    assert tutte_bivariate_crapo(free_matroid(GroundSet(2))) == X * X


def test_kochol_equals_crapo(fixture, small_matroids):
    m, mp = fixture_matroids()
    pool = [m, mp, uniform_matroid(1, GroundSet(2)), rank_zero_matroid(GroundSet(1))]
    pool += small_matroids
    for matroid in pool:
        assert tutte_bivariate_kochol(matroid) == tutte_bivariate_crapo(matroid)


def test_m0_expansion_equals_crapo(small_matroids):
    m, _ = fixture_matroids()
    pool = [m, uniform_matroid(1, GroundSet(2)), free_matroid(GroundSet(1))]
    pool += small_matroids
    for matroid in pool:
        assert tutte_m0_expansion(matroid) == tutte_bivariate_crapo(matroid)


def test_rank_generating_on_identity_pairs(small_matroids):
    for matroid in small_matroids[::2]:
        assert tutte_rank_generating(Perspective(matroid, matroid)) == tutte_bivariate_crapo(matroid)


def test_rank_generating_empty_matroid():
    e = GroundSet(0)
    m = Matroid.from_bases(e, [0])
    assert tutte_rank_generating(Perspective(m, m)) == Poly.constant(1)


def test_specialize_m0(fixture):
    m, _ = fixture_matroids()
    expected = tutte_bivariate_crapo(m).substitute(x=Z + 1)
    assert specialize_m0(m) == expected
    assert specialize_m0(free_matroid(GroundSet(1))) == Z + 1
    assert specialize_m0(rank_zero_matroid(GroundSet(1))) == Y


def test_specialize_m0_small(small_matroids):
    for matroid in small_matroids[::3]:
        specialize_m0(matroid)  # internal cross-check raises on any mismatch


def test_evaluation_identities(small_matroids):
    m, _ = fixture_matroids()
    for matroid in [m] + small_matroids[::2]:
        t = tutte_bivariate_crapo(matroid)
        assert t.evaluate(1, 1, 0) == len(matroid.bases)
        assert t.evaluate(2, 2, 0) == 1 << matroid.ground.size


def test_order_invariance_on_fixture():
    base = tutte_activities(fixture_perspective())
    rng = random.Random(99)
    for _ in range(10):
        order = rng.sample(range(1, 6), 5)
        assert tutte_activities(fixture_perspective(order)) == base


def test_m_equals_quotient_has_no_z(small_matroids):
    for matroid in small_matroids[::4]:
        t = tutte_activities(Perspective(matroid, matroid))
        assert t.max_z_exponent() == 0
