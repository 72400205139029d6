import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from corrideal.errors import NegativeOrMalformedNumber
from corrideal.extnat import INF, ExtNat

extnats = st.one_of(st.integers(min_value=0, max_value=10**6).map(ExtNat), st.just(INF))


def test_saturation():
    assert INF + 3 == INF
    assert 3 + INF == INF
    assert INF * 2 == INF
    assert INF * 0 == 0
    assert 0 * INF == 0
    assert ExtNat(2) * 3 == 6


def test_order_and_int_interop():
    assert ExtNat(5) < INF
    assert not INF < INF
    assert INF == math.inf
    assert ExtNat(4) == 4
    assert {ExtNat(4): "x"}[4] == "x"
    assert max(ExtNat(3), INF, ExtNat(7)) is INF


@pytest.mark.parametrize("raw", ["inf", "INF", "∞", math.inf])
def test_infinite_literals(raw):
    assert ExtNat(raw) == INF


@pytest.mark.parametrize("raw", [-1, "three", 1.5, True, None, "-inf"])
def test_malformed(raw):
    with pytest.raises(NegativeOrMalformedNumber):
        ExtNat(raw)


def test_json_form():
    assert INF.to_json() == "inf"
    assert ExtNat(7).to_json() == 7
    assert str(INF) == "inf"
    with pytest.raises(OverflowError):
        int(INF)


@given(extnats, extnats, extnats)
def test_semiring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(extnats, extnats, extnats)
def test_order_compatible_with_addition(a, b, c):
    if a <= b:
        assert a + c <= b + c


@given(extnats)
def test_every_finite_below_infinity(a):
    assert a <= INF
    assert (a < INF) == a.is_finite
