from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedekind_ore.errors import ParseError
from dedekind_ore.fields import FieldElement, make_order
from dedekind_ore.formats import format_fractional, format_ideal, parse_fractional, parse_ideal
from dedekind_ore.ideals import (
    FractionalIdeal,
    ideal_colon,
    ideal_from_generators,
    ideal_intersect,
    ideal_mul,
    ideal_sum,
    ideals_of_norm_up_to,
    principal_ideal,
    unit_ideal,
)
from oracles import box, covolume, in_lattice, lattice_points

ORDERS = [make_order(d) for d in (0, -1, -2, -3, -5, -23)]
IDEALS = {o.d: ideals_of_norm_up_to(o, 30) for o in ORDERS}


def ideal_pairs():
    return st.sampled_from(ORDERS).flatmap(
        lambda o: st.tuples(st.sampled_from(IDEALS[o.d]), st.sampled_from(IDEALS[o.d]))
    )


def P2(o):
    return ideal_from_generators([FieldElement(o, 2), FieldElement(o, 1, 1)], o)


def test_generators_to_hnf(O5):
    I = P2(O5)
    assert (I.a, I.b, I.c, I.norm) == (2, 1, 1, 2)
    J = principal_ideal(O5, 3)
    assert (J.a, J.b, J.c, J.norm) == (3, 0, 3, 9)
    assert principal_ideal(O5, 1) == unit_ideal(O5)
    assert unit_ideal(O5).is_unit()


def test_mul_examples(O5, Z):
    I = P2(O5)
    assert I * I == principal_ideal(O5, 2)
    assert principal_ideal(Z, 2) * principal_ideal(Z, 3) == principal_ideal(Z, 6)
    assert I * unit_ideal(O5) == I


def test_intersect_examples(O5, Z):
    assert principal_ideal(Z, 2) & principal_ideal(Z, 3) == principal_ideal(Z, 6)
    Q = parse_ideal("<3, 1+w>", O5)
    Qbar = parse_ideal("<3, 1-w>", O5)
    assert Q != Qbar
    assert Q & Qbar == principal_ideal(O5, 3)
    assert Q & Q == Q


def test_colon_examples(Z, O5):
    six, two, three = (principal_ideal(Z, n) for n in (6, 2, 3))
    assert ideal_colon(six, two) == FractionalIdeal(three, 1)
    # over K the colon is 3/2 Z; inside R it is 3Z
    assert ideal_colon(three, two) == FractionalIdeal(three, 2)
    assert ideal_colon(three, two).integral_part() == three
    I = P2(O5)
    assert ideal_colon(I, unit_ideal(O5)) == FractionalIdeal(I, 1)


def test_inverse(O5):
    I = P2(O5)
    F = FractionalIdeal(I, 1)
    assert F * F.inverse() == FractionalIdeal(unit_ideal(O5), 1)
    assert str(F.inverse()) == "[2, 1+1*w]/2"


def test_format_and_parse(O5, Z):
    I = P2(O5)
    assert format_ideal(I) == "[2, 1+1*w]"
    assert parse_ideal("[2, 1+1*w]", O5) == I
    assert parse_ideal("[2,1+w]", O5) == I
    assert format_ideal(principal_ideal(Z, 6)) == "[6]"
    F = FractionalIdeal(I, 3)
    assert parse_fractional(format_fractional(F), O5) == F
    for bad in ("[2, 0+1*w]", "[2, 3+1*w]", "[3, 1+2*w]", "2, 1+w", "[0]"):
        with pytest.raises(ParseError):
            parse_ideal(bad, O5 if "w" in bad else Z)


def test_ideal_counts():
    # number of ideals of norm n is multiplicative; spot check d=-5
    assert len(ideals_of_norm_up_to(make_order(-5), 50)) == 73
    assert len(ideals_of_norm_up_to(make_order(0), 10)) == 10


@given(ideal_pairs())
@settings(max_examples=200, deadline=None)
def test_mul_against_covolume(pair):
    I, J = pair
    K = ideal_mul(I, J)
    gens = [g * h for g in I.basis() for h in J.basis()]
    assert all(in_lattice(K, x) for x in gens)
    assert K.norm == covolume(gens) == I.norm * J.norm


@given(ideal_pairs())
@settings(max_examples=200, deadline=None)
def test_intersect_and_sum_against_box(pair):
    I, J = pair
    B = 40
    both = lattice_points(I, B) & lattice_points(J, B)
    assert lattice_points(ideal_intersect(I, J), B) == both
    S = ideal_sum(I, J)
    assert all(in_lattice(S, g) for g in I.basis() + J.basis())
    assert covolume(I.basis() + J.basis()) == S.norm
    # Dedekind: (I cap J)(I + J) = IJ
    assert ideal_intersect(I, J) * S == I * J


@given(ideal_pairs())
@settings(max_examples=150, deadline=None)
def test_colon_against_box(pair):
    I, J = pair
    F = ideal_colon(I, J)
    n = J.norm
    for x in box(I.order, 6, n):
        member = all(in_lattice(I, x * g) for g in J.basis())
        assert F.contains(x) == member
