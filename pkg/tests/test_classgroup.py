from __future__ import annotations

from math import gcd, isqrt

import pytest

from dedekind_ore.classgroup import (
    QuadForm,
    class_group,
    class_number_by_generation,
    class_of,
    compose_forms,
    form_to_ideal,
    ideal_to_form,
    reduced_forms,
    unit_group,
    units,
)
from dedekind_ore.errors import UnsupportedError
from dedekind_ore.fields import make_order
from dedekind_ore.ideals import FractionalIdeal, ideals_of_norm_up_to, principal_ideal, unit_ideal
from dedekind_ore.formats import parse_ideal

H = {-1: 1, -2: 1, -3: 1, -7: 1, -11: 1, -5: 2, -6: 2, -10: 2, -23: 3, -14: 4, -21: 4, -30: 4, -47: 5, -71: 7}


def naive_forms(disc):
    """Reduced primitive forms by a plain triple loop."""
    out = set()
    for A in range(1, isqrt(-disc) + 1):
        for B in range(-A, A + 1):
            for C in range(A, (B * B - disc) // 4 + 2):
                if B * B - 4 * A * C != disc or gcd(gcd(A, B), C) != 1:
                    continue
                if (abs(B) == A or A == C) and B < 0:
                    continue
                out.add((A, B, C))
    return out


@pytest.mark.parametrize("d", sorted(H))
def test_class_numbers_two_ways(d):
    o = make_order(d)
    cg = class_group(o)
    assert cg.h == H[d] == class_number_by_generation(o)
    assert {(f.A, f.B, f.C) for f in reduced_forms(o.disc)} == naive_forms(o.disc)


def test_known_forms():
    assert [str(f) for f in reduced_forms(-20)] == ["(1,0,5)", "(2,2,3)"]
    assert [str(f) for f in reduced_forms(-4)] == ["(1,0,1)"]
    assert {str(f) for f in reduced_forms(-23)} == {"(1,1,6)", "(2,1,3)", "(2,-1,3)"}


@pytest.mark.parametrize("d", [-5, -23, -14, -47])
def test_table_is_a_group(d):
    cg = class_group(make_order(d))
    h = cg.h
    for i in range(h):
        assert cg.mul(0, i) == i
        assert cg.mul(i, cg.inverse(i)) == 0
        for j in range(h):
            assert cg.mul(i, j) == cg.mul(j, i)
            for k in range(h):
                assert cg.mul(cg.mul(i, j), k) == cg.mul(i, cg.mul(j, k))


@pytest.mark.parametrize("d", [-5, -23, -14, -21, -30, -47, -71, -3, -1])
def test_class_of_is_homomorphism(d):
    o = make_order(d)
    cg = class_group(o)
    ideals = ideals_of_norm_up_to(o, 25)
    for I in ideals:
        for J in ideals[:12]:
            assert class_of(I * J, cg) == cg.mul(class_of(I, cg), class_of(J, cg))


@pytest.mark.parametrize("d", [-5, -23, -47, -3])
def test_form_ideal_roundtrip(d):
    o = make_order(d)
    for f in reduced_forms(o.disc):
        I = form_to_ideal(o, f)
        assert I.norm == f.A
        assert ideal_to_form(I) == f


def test_class_of_examples(O5):
    cg = class_group(O5)
    P = parse_ideal("[2, 1+1*w]", O5)
    assert class_of(principal_ideal(O5, 3), cg) == 0
    assert class_of(P, cg) == 1
    F = FractionalIdeal(P, 1)
    assert class_of(F * F.inverse(), cg) == 0
    assert class_of(FractionalIdeal(P, 7), cg) == 1


def test_composition_matches_ideal_product():
    o = make_order(-23)
    f = reduced_forms(o.disc)[1]
    g = compose_forms(f, f)
    assert ideal_to_form(form_to_ideal(o, f) * form_to_ideal(o, f)) == g
    assert compose_forms(g, f) == QuadForm(1, 1, 6)


def test_units():
    assert unit_group(make_order(-1)).torsion_order == 4
    assert unit_group(make_order(-3)).torsion_order == 6
    assert unit_group(make_order(0)).torsion_order == 2
    assert unit_group(make_order(-5)).torsion_order == 2
    for d in (-1, -3, -5, 0):
        us = units(make_order(d))
        assert len(set(us)) == unit_group(make_order(d)).torsion_order
        assert all(abs(u.norm()) == 1 and u.is_integral() for u in us)


def test_z_class_group(Z):
    cg = class_group(Z)
    assert cg.h == 1 and cg.representatives == (unit_ideal(Z),)


@pytest.mark.parametrize("d", [2, 5, 13])
def test_real_quadratic_unsupported(d):
    with pytest.raises(UnsupportedError):
        class_group(make_order(d))
    with pytest.raises(UnsupportedError):
        unit_group(make_order(d))
