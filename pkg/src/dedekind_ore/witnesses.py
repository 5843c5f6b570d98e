"""Arithmetic witnesses behind pure infiniteness of the boundary quotients.

``find_pi4_witness`` produces ``(b, a)`` with

* 1_b  ``b`` in the meet of the pieces (the ambient ideal when there are none)
* 2_b  every ``d_i = (b'_i - b_i) + (a'_i - a_i) b`` is nonzero
* 1_a  ``a`` in ``1 +`` that meet
* 2_a  no ``d_i`` lies in ``aR``

and ``find_pi5_witness`` produces ``(c, r1, r2)`` with ``c`` a non-unit in
``1 +`` the meet and ``r1, r2`` in the meet but in different classes mod ``cR``.

Searches walk candidates in the lattice order of :meth:`IntegralIdeal.elements`.
The checkers at the bottom of the module are written against raw coordinates
and field division only, so they do not share code with the search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence

from . import lattice
from .errors import BudgetExceeded, DomainError
from .fields import FieldElement, Order
from .formats import format_element_bare
from .ideals import IntegralIdeal, ideal_intersect
from .primes import bezout_split, crt_solve, prime_ideals_up_to

Pair = tuple  # ((b', a'), (b, a)) of FieldElements


@dataclass(frozen=True)
class Pi4Instance:
    ambient: IntegralIdeal
    pieces: tuple[IntegralIdeal, ...] = ()
    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        object.__setattr__(self, "pairs", tuple(self.pairs))
        for J in self.pieces:
            if not J <= self.ambient:
                raise DomainError(f"piece {J} is not contained in {self.ambient}")
        for (bp, ap), (b, a) in self.pairs:
            if bp == b and ap == a:
                raise DomainError("each pair must consist of two distinct elements")
            for u in (bp, ap, b, a):
                if not u.is_integral():
                    raise DomainError(f"{u} is not in R")
            if ap.is_zero() or a.is_zero():
                raise DomainError("multipliers must be nonzero")

    @property
    def order(self) -> Order:
        return self.ambient.order

    def meet(self) -> IntegralIdeal:
        return _meet(self.ambient, self.pieces)


@dataclass(frozen=True)
class Pi5Instance:
    ideal: IntegralIdeal
    pieces: tuple[IntegralIdeal, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        for J in self.pieces:
            if not J <= self.ideal:
                raise DomainError(f"piece {J} is not contained in {self.ideal}")

    @property
    def order(self) -> Order:
        return self.ideal.order

    def meet(self) -> IntegralIdeal:
        return _meet(self.ideal, self.pieces)


def _meet(ambient: IntegralIdeal, pieces: Sequence[IntegralIdeal]) -> IntegralIdeal:
    if not pieces:
        return ambient
    return reduce(ideal_intersect, pieces)


def _divides(a: FieldElement, u: FieldElement) -> bool:
    return (u / a).is_integral()


def _is_nonunit(u: FieldElement) -> bool:
    return abs(u.norm()) > 1


# -- prime avoidance ----------------------------------------------------------------


def _avoids_some_prime_factor(a: FieldElement, z: FieldElement) -> bool:
    """True iff some prime dividing ``a`` does not contain ``z``.

    If every prime of ``a`` contained ``z`` then ``a | z^e`` for ``e`` at
    least the largest exponent, which is bounded by ``log2 |N(a)|``.
    """
    n = abs(a.norm())
    if n <= 1:
        return False
    e = int(n).bit_length() + 1
    return not _divides(a, z**e)


def prime_avoiding_element(
    J: IntegralIdeal, z: FieldElement, max_height: int = 200, prime_bound: int = 2000
) -> FieldElement:
    """A non-unit ``a`` in ``1 + J`` lying in some prime ``P`` with ``z`` outside ``P``.

    Then ``z`` is not in ``aR``.  Small candidates are scanned first; failing
    that, a prime ``P`` coprime to ``J`` and missing ``z`` is chosen and ``a``
    is obtained by CRT from ``a = 0 mod P`` and ``a = 1 mod J``.
    """
    if z.is_zero():
        raise DomainError("z must be nonzero")
    one = J.order.one
    for t in J.elements(max_height):
        a = one + t
        if a.is_zero():
            continue
        if _avoids_some_prime_factor(a, z):
            assert not _divides(a, z)
            return a
    for P, _, _ in prime_ideals_up_to(J.order, prime_bound):
        if P.contains(z) or bezout_split(P, J) is None:
            continue
        a = crt_solve([(J.order.zero, P), (one, J)])
        if a.is_zero():
            a = a + P.norm * J.norm * one
        assert P.contains(a) and J.contains(a - one) and not _divides(a, z)
        return a
    raise BudgetExceeded(f"no suitable prime of norm <= {prime_bound}")


# -- searches -----------------------------------------------------------------------


def _differences(inst: Pi4Instance, b: FieldElement) -> list[FieldElement]:
    return [(bp - bb) + (ap - aa) * b for (bp, ap), (bb, aa) in inst.pairs]


def find_pi4_witness(inst: Pi4Instance, max_height: int = 60) -> tuple[FieldElement, FieldElement]:
    M = inst.meet()
    one = inst.order.one
    for height in (max_height, 4 * max_height):
        b = None
        for t in M.elements(height):
            if all(not u.is_zero() for u in _differences(inst, t)):
                b = t
                break
        if b is None:
            continue
        diffs = _differences(inst, b)
        a = None
        for t in M.elements(height):
            cand = one + t
            if cand.is_zero():
                continue
            if not any(_divides(cand, u) for u in diffs):
                a = cand
                break
        if a is None:
            z = reduce(lambda x, y: x * y, diffs, one)
            a = prime_avoiding_element(M, z)
        report = check_pi4(inst, b, a)
        if not all(report.values()):
            raise AssertionError(f"pi4 witness failed its checks: {report}")
        return b, a
    raise BudgetExceeded(f"no pi4 witness up to lattice height {4 * max_height}")


def find_pi5_witness(inst: Pi5Instance, max_height: int = 60) -> tuple[FieldElement, FieldElement, FieldElement]:
    M = inst.meet()
    one = inst.order.one
    c = None
    for t in M.elements(max_height):
        cand = one + t
        if not cand.is_zero() and _is_nonunit(cand):
            c = cand
            break
    if c is None:
        c = prime_avoiding_element(M, one)
    r1 = inst.order.zero
    r2 = next((t for t in M.elements(max_height) if not _divides(c, t - r1)), None)
    if r2 is None:
        raise BudgetExceeded(f"no second residue up to lattice height {max_height}")
    report = check_pi5(inst, c, r1, r2)
    if not all(report.values()):
        raise AssertionError(f"pi5 witness failed its checks: {report}")
    return c, r1, r2


# -- independent checkers -------------------------------------------------------------


def _coords(u: FieldElement) -> tuple[Fraction, Fraction]:
    return Fraction(u.x, u.den), Fraction(u.y, u.den)


def _in_lattice(I: IntegralIdeal, u: FieldElement) -> bool:
    """Membership in ``Z a + Z (b + c w)`` by back substitution."""
    x, y = _coords(u)
    if I.order.is_z:
        return y == 0 and (x / I.a).denominator == 1
    v = y / I.c
    if v.denominator != 1:
        return False
    return ((x - v * I.b) / I.a).denominator == 1


def _in_principal(a: FieldElement, u: FieldElement) -> bool:
    q = u / a
    return q.den == 1


def _coprime(a: FieldElement, J: IntegralIdeal) -> bool:
    """``aR + J == R``: the lattice spanned by ``a``, ``a w`` and ``J`` has index 1."""
    order = J.order
    gens = [a] if order.is_z else [a, a * order.omega]
    rows = [(g.x, g.y) if not order.is_z else (g.x,) for g in gens] + J.rows()
    H, _, _ = lattice.hnf_with_transform(rows)
    det = 1
    for i, row in enumerate(H):
        det *= row[i]
    return abs(det) == 1 and len(H) == (1 if order.is_z else 2)


def check_pi4(inst: Pi4Instance, b: FieldElement, a: FieldElement) -> dict[str, bool]:
    pieces = list(inst.pieces) or [inst.ambient]
    one = inst.order.one
    diffs = [(bp - bb) + (ap - aa) * b for (bp, ap), (bb, aa) in inst.pairs]
    return {
        "1_b": b.den == 1 and all(_in_lattice(J, b) for J in pieces),
        "2_b": all(not (u.x == 0 and u.y == 0) for u in diffs),
        "1_a": not a.is_zero() and all(_in_lattice(J, a - one) for J in pieces),
        "2_a": not a.is_zero() and not any(_in_principal(a, u) for u in diffs),
        "coprime": not a.is_zero() and all(_coprime(a, J) for J in [inst.ambient, *inst.pieces]),
    }


def check_pi5(inst: Pi5Instance, c: FieldElement, r1: FieldElement, r2: FieldElement) -> dict[str, bool]:
    pieces = list(inst.pieces) or [inst.ideal]
    one = inst.order.one
    return {
        "*_c": (
            c.den == 1
            and abs(c.norm()) > 1
            and all(_in_lattice(J, c - one) for J in pieces)
        ),
        "*_r": (
            all(_in_lattice(J, r) for J in pieces for r in (r1, r2))
            and not _in_principal(c, r1 - r2)
        ),
    }


def checks_json(report: dict[str, bool]) -> list[dict]:
    return [{"condition": k, "ok": v} for k, v in report.items()]


@dataclass
class WitnessResult:
    kind: str
    witness: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": self.witness, "checks": checks_json(self.checks)}


def pi4_result(inst: Pi4Instance) -> WitnessResult:
    b, a = find_pi4_witness(inst)
    w = {"b": format_element_bare(b), "a": format_element_bare(a)}
    return WitnessResult("pi4", w, check_pi4(inst, b, a))


def pi5_result(inst: Pi5Instance) -> WitnessResult:
    c, r1, r2 = find_pi5_witness(inst)
    w = {"c": format_element_bare(c), "r1": format_element_bare(r1), "r2": format_element_bare(r2)}
    return WitnessResult("pi5", w, check_pi5(inst, c, r1, r2))

