from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedekind_ore.errors import DomainError, ParseError
from dedekind_ore.fields import FieldElement, OmegaKind, make_order
from dedekind_ore.formats import format_element, parse_element

DS = [0, -1, -2, -3, -5, -7, -23, 2, 5, 13]


def test_make_order_discriminants():
    o = make_order(-1)
    assert (o.disc, o.omega_kind) == (-4, OmegaKind.SQRT_D)
    o = make_order(-3)
    assert (o.disc, o.omega_kind) == (-3, OmegaKind.HALF_ONE_PLUS_SQRT_D)
    o = make_order(0)
    assert o.is_z and o.disc == 1
    assert make_order(-5).disc == -20
    assert make_order(5).disc == 5


@pytest.mark.parametrize("d", [1, 4, -4, 12, -8])
def test_make_order_rejects(d):
    with pytest.raises(DomainError):
        make_order(d)


def test_norm_and_inverse(O5, O1):
    assert FieldElement(O5, 1, 1).norm() == 6
    assert O5.one.norm() == 1
    i_plus_1 = FieldElement(O1, 1, 1)
    assert i_plus_1.inverse() == FieldElement(O1, 1, -1, 2)
    assert i_plus_1 * i_plus_1.inverse() == O1.one


def test_half_integral_omega():
    o = make_order(-3)
    w = o.omega
    # w^2 = w - 1 for (1+sqrt(-3))/2
    assert w * w == w - o.one
    assert w.norm() == 1 and w.is_unit()
    assert w**6 == o.one


def test_z_has_no_w_part(Z):
    with pytest.raises(DomainError):
        FieldElement(Z, 1, 1)
    assert FieldElement(Z, 6, 0, 4) == FieldElement(Z, 3, 0, 2)
    assert FieldElement(Z, -3).norm() == -3


def elements(order, lo=-20, hi=20):
    ys = st.just(0) if order.is_z else st.integers(lo, hi)
    return st.builds(lambda x, y, den: FieldElement(order, x, y, den), st.integers(lo, hi), ys, st.integers(1, 6))


@pytest.mark.parametrize("d", DS)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(d, data):
    o = make_order(d)
    u, v, t = (data.draw(elements(o)) for _ in range(3))
    assert (u * v) * t == u * (v * t)
    assert u * (v + t) == u * v + u * t
    assert (u * v).norm() == u.norm() * v.norm()
    if not u.is_zero():
        assert u * u.inverse() == o.one
        assert (v / u) * u == v
    assert u.conjugate().conjugate() == u
    if not o.is_z:
        assert u * u.conjugate() == FieldElement(o, u.norm().numerator, 0, u.norm().denominator)


@pytest.mark.parametrize("d", DS)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_format_roundtrip(d, data):
    o = make_order(d)
    u = data.draw(elements(o))
    assert parse_element(format_element(u), o) == u


def test_parse_variants(O5, Z):
    assert parse_element("w", O5) == O5.omega
    assert parse_element("-w", O5) == -O5.omega
    assert parse_element("2*w", O5) == FieldElement(O5, 0, 2)
    assert parse_element("1+w", O5) == FieldElement(O5, 1, 1)
    assert parse_element("(1-1*w)/2", O5) == FieldElement(O5, 1, -1, 2)
    assert parse_element(" 3 ", Z).norm() == Fraction(3)
    for bad in ("1+", "x", "1/0", "w+1"):
        with pytest.raises(ParseError):
            parse_element(bad, O5)
    with pytest.raises(ParseError):
        parse_element("1+w", Z)
