from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leavitt import FieldError, PrimeField, QQ, parse_field


def test_parse_field():
    assert parse_field("q") is QQ
    f7 = parse_field("gf:7")
    assert isinstance(f7, PrimeField) and f7.p == 7
    with pytest.raises(FieldError):
        parse_field("gf:6")
    with pytest.raises(FieldError):
        parse_field("reals")


def test_rational_coercion():
    assert QQ.of(3) == Fraction(3)
    assert QQ.of("2/5") == Fraction(2, 5)
    assert QQ.of(Fraction(-1, 2)) == Fraction(-1, 2)


@given(st.integers(), st.integers())
def test_gf_addition_matches_mod(a, b):
    f = parse_field("gf:11")
    assert (f.of(a) + f.of(b)) == f.of((a + b) % 11)


@given(st.integers(min_value=1, max_value=10 ** 6))
def test_gf_inverse(a):
    f = parse_field("gf:13")
    x = f.of(a)
    if x == f.zero:
        return
    assert x * (f.one / x) == f.one
