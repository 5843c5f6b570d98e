from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedekind_ore.errors import NotCoprimeError
from dedekind_ore.fields import FieldElement, make_order
from dedekind_ore.formats import parse_ideal
from dedekind_ore.ideals import ideals_of_norm_up_to, principal_ideal
from dedekind_ore.primes import crt_solve, kronecker, prime_ideals_up_to, rational_primes


def test_rational_primes():
    assert rational_primes(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert rational_primes(1) == []


def test_kronecker():
    assert kronecker(-20, 3) == 1
    assert kronecker(-4, 3) == -1
    assert kronecker(-23, 2) == 1
    assert kronecker(-20, 2) == 0


def test_primes_d_minus_5(O5):
    got = prime_ideals_up_to(O5, 5)
    assert [(P.norm, f, ram) for P, f, ram in got] == [(2, 1, True), (3, 1, False), (3, 1, False), (5, 1, True)]


def test_primes_z(Z):
    assert [P.a for P, _, _ in prime_ideals_up_to(Z, 10)] == [2, 3, 5, 7]


def test_primes_gaussian(O1):
    got = prime_ideals_up_to(O1, 3)
    assert len(got) == 1
    P, f, ram = got[0]
    assert P.norm == 2 and ram
    assert [P.norm for P, _, _ in prime_ideals_up_to(O1, 9)] == [2, 5, 5, 9]


@pytest.mark.parametrize("d", [-1, -2, -3, -5, -23])
def test_primes_are_maximal(d):
    o = make_order(d)
    ideals = ideals_of_norm_up_to(o, 60)
    for P, f, _ in prime_ideals_up_to(o, 60):
        # no ideal strictly between P and R
        assert not any(P < J and not J.is_unit() for J in ideals if J.norm < P.norm)
        assert f in (1, 2)
    # product of the primes over p is (p) up to multiplicity; check by norm
    for p in (2, 3, 5, 7):
        above = [P for P, _, _ in prime_ideals_up_to(o, p * p) if P.norm % p == 0]
        prod = above[0]
        for Q in above[1:]:
            prod = prod * Q
        assert principal_ideal(o, p) <= prod


def test_crt_examples(Z, O5):
    three, five = principal_ideal(Z, 3), principal_ideal(Z, 5)
    assert crt_solve([(FieldElement(Z, 1), three), (FieldElement(Z, 2), five)]) == FieldElement(Z, 7)
    assert crt_solve([(FieldElement(Z, 1), three), (FieldElement(Z, 0), five)]) == FieldElement(Z, 10)
    P2 = parse_ideal("[2, 1+1*w]", O5)
    P3 = parse_ideal("<3, 1+w>", O5)
    x = crt_solve([(O5.zero, P2), (O5.one, P3)])
    assert P2.contains(x) and P3.contains(x - O5.one)


def test_crt_not_coprime(Z):
    with pytest.raises(NotCoprimeError) as exc:
        crt_solve([(FieldElement(Z, 1), principal_ideal(Z, 4)), (FieldElement(Z, 0), principal_ideal(Z, 6))])
    assert exc.value.pair == (0, 1)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
@settings(max_examples=100, deadline=None)
def test_crt_random_d_minus_5(x1, y1, x2, y2):
    o = make_order(-5)
    Q = parse_ideal("<3, 1+w>", o)
    R7 = parse_ideal("<7, 3+w>", o)
    r1, r2 = FieldElement(o, x1, y1), FieldElement(o, x2, y2)
    x = crt_solve([(r1, Q), (r2, R7)])
    assert Q.contains(x - r1) and R7.contains(x - r2)
