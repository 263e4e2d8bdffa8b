"""Gaussian rational arithmetic and the literal grammar."""

from fractions import Fraction as Q
from random import Random

import pytest

from lparams.errors import InputError
from lparams.gaussian import GaussQ, as_gauss, format_gauss, gvec, parse_gauss


def test_field_ops():
    a = GaussQ(Q(1, 2), Q(3))
    b = GaussQ(Q(-1), Q(1, 3))
    assert a + b == GaussQ(Q(-1, 2), Q(10, 3))
    assert a - b == GaussQ(Q(3, 2), Q(8, 3))
    assert a * b == GaussQ(Q(-3, 2), Q(-17, 6))
    assert -a == GaussQ(Q(-1, 2), Q(-3))
    assert a.conj() == GaussQ(Q(1, 2), Q(-3))
    # i^2 = -1
    i = GaussQ(0, 1)
    assert i * i == as_gauss(-1)


def test_mixed_rational_ops():
    a = GaussQ(Q(1, 2), Q(1))
    assert a + 1 == GaussQ(Q(3, 2), Q(1))
    assert 1 + a == GaussQ(Q(3, 2), Q(1))
    assert 2 * a == GaussQ(Q(1), Q(2))
    assert a * Q(1, 2) == GaussQ(Q(1, 4), Q(1, 2))
    assert 1 - a == GaussQ(Q(1, 2), Q(-1))


def test_eq_and_hash_against_rationals():
    assert GaussQ(Q(3, 2), 0) == Q(3, 2)
    assert hash(GaussQ(Q(3, 2), 0)) == hash(Q(3, 2))
    assert GaussQ(Q(3, 2), 1) != Q(3, 2)
    assert as_gauss(Q(5)).is_rational()
    assert not GaussQ(0, 1).is_rational()
    assert GaussQ(0, 0).is_zero()


def test_sort_key_orders_lexicographically():
    vals = [GaussQ(1, 0), GaussQ(0, 2), GaussQ(0, -1), GaussQ(-1, 5)]
    ordered = sorted(vals, key=lambda z: z.sort_key())
    assert ordered == [GaussQ(-1, 5), GaussQ(0, -1), GaussQ(0, 2), GaussQ(1, 0)]


def test_format_parse_round_trip_seeded():
    rng = Random(202)
    for _ in range(500):
        z = GaussQ(Q(rng.randrange(-40, 41), rng.randrange(1, 13)),
                   Q(rng.randrange(-40, 41), rng.randrange(1, 13)))
        assert parse_gauss(format_gauss(z)) == z


def test_parse_literal_forms():
    assert parse_gauss("3/4") == GaussQ(Q(3, 4), 0)
    assert parse_gauss("-2") == GaussQ(-2, 0)
    assert parse_gauss("i") == GaussQ(0, 1)
    assert parse_gauss("-i") == GaussQ(0, -1)
    assert parse_gauss("3/2i") == GaussQ(0, Q(3, 2))
    assert parse_gauss("1/2+3i") == GaussQ(Q(1, 2), 3)
    assert parse_gauss("1/2-1/3i") == GaussQ(Q(1, 2), Q(-1, 3))


@pytest.mark.parametrize("bad", ["", "x", "1+", "i2", "1/0", "2+2", "1//2"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(InputError):
        parse_gauss(bad)


def test_gvec_coerces_entrywise():
    v = gvec([1, Q(1, 2), GaussQ(0, 1)])
    assert v == (as_gauss(1), as_gauss(Q(1, 2)), GaussQ(0, 1))
