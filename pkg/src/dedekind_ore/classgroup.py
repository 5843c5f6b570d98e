"""Class groups of imaginary quadratic fields via reduced binary quadratic forms.

The form ``(A, B, C)`` corresponds to the ideal ``Z*A + Z*(-B + sqrt(disc))/2``;
the inverse map sends a primitive ideal ``Z*a + Z*(b + w)`` back to the form
with the same lattice, so both directions are pinned to one convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import DomainError, UnsupportedError
from .fields import FieldElement, OmegaKind, Order
from .ideals import IntegralIdeal, as_fractional, unit_ideal
from .lattice import xgcd


@dataclass(frozen=True, order=True)
class QuadForm:
    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def is_reduced(self) -> bool:
        A, B, C = self.A, self.B, self.C
        if not (A > 0 and abs(B) <= A <= C):
            return False
        if (abs(B) == A or A == C) and B < 0:
            return False
        return True

    def normalized(self) -> QuadForm:
        A, B, C = self.A, self.B, self.C
        if -A < B <= A:
            return self
        r = (A - B) // (2 * A)
        return QuadForm(A, B + 2 * r * A, A * r * r + B * r + C)

    def reduced(self) -> QuadForm:
        if self.disc >= 0 or self.A <= 0:
            raise UnsupportedError("only positive definite forms can be reduced")
        f = self.normalized()
        while f.A > f.C or (f.A == f.C and f.B < 0):
            A, B, C = f.A, f.B, f.C
            s = (C + B) // (2 * C)
            f = QuadForm(C, -B + 2 * s * C, C * s * s - B * s + A)
        return f.normalized()

    def inverse(self) -> QuadForm:
        return QuadForm(self.A, -self.B, self.C).reduced()

    def __str__(self) -> str:
        return f"({self.A},{self.B},{self.C})"


def compose_forms(f1: QuadForm, f2: QuadForm) -> QuadForm:
    """Gaussian composition of primitive positive definite forms, reduced."""
    if f1.disc != f2.disc:
        raise DomainError("forms of different discriminants")
    if f1.A > f2.A:
        f1, f2 = f2, f1
    a1, b1, _ = f1.A, f1.B, f1.C
    a2, b2, c2 = f2.A, f2.B, f2.C
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _ = xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, x2, v = xgcd(s, d)
        y2 = -v
    v1, v2 = a1 // d1, a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    num = b3 * b3 - f1.disc
    assert num % (4 * a3) == 0
    return QuadForm(a3, b3, num // (4 * a3)).reduced()


def reduced_forms(disc: int) -> list[QuadForm]:
    """Primitive reduced forms of a negative discriminant, identity first."""
    if disc >= 0:
        raise UnsupportedError("reduced-form enumeration needs a negative discriminant")
    out = []
    amax = isqrt(-disc // 3)
    for A in range(1, amax + 1):
        for B in range(-A + 1, A + 1):
            if (B - disc) % 2:
                continue
            num = B * B - disc
            if num % (4 * A):
                continue
            C = num // (4 * A)
            f = QuadForm(A, B, C)
            if f.is_reduced() and gcd(gcd(A, B), C) == 1:
                out.append(f)
    out.sort(key=lambda f: (f.A, abs(f.B), f.B < 0, f.C))
    return out


def principal_form(disc: int) -> QuadForm:
    if disc % 4 == 0:
        return QuadForm(1, 0, -disc // 4)
    return QuadForm(1, 1, (1 - disc) // 4)


def form_to_ideal(order: Order, f: QuadForm) -> IntegralIdeal:
    """``Z*A + Z*(-B + sqrt(disc))/2`` in HNF."""
    if order.is_z:
        return unit_ideal(order)
    if order.omega_kind is OmegaKind.SQRT_D:
        x0 = -f.B // 2  # sqrt(disc) = 2w
    else:
        x0 = (-f.B - 1) // 2  # sqrt(disc) = 2w - 1
    return IntegralIdeal(order, f.A, x0 % f.A, 1)


def ideal_to_form(J) -> QuadForm:
    """Reduced form whose ideal lies in the class of ``J`` (integral or fractional)."""
    F = as_fractional(J)
    order = F.order
    if order.is_z:
        return QuadForm(1, 1, 0)
    I = F.num
    a, b = I.a // I.c, I.b // I.c
    if order.omega_kind is OmegaKind.SQRT_D:
        B = -2 * b
    else:
        B = -2 * b - 1
    num = B * B - order.disc
    assert num % (4 * a) == 0, "primitive part is not an ideal"
    return QuadForm(a, B, num // (4 * a)).reduced()


@dataclass(frozen=True)
class ClassGroup:
    order: Order
    h: int
    elements: tuple[QuadForm, ...]
    representatives: tuple[IntegralIdeal, ...]
    table: tuple[tuple[int, ...], ...]

    def index(self, f: QuadForm) -> int:
        return self.elements.index(f.reduced() if not self.order.is_z else f)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def power(self, i: int, n: int) -> int:
        k = 0
        for _ in range(n):
            k = self.mul(k, i)
        return k

    def inverse(self, i: int) -> int:
        return next(j for j in range(self.h) if self.table[i][j] == 0)

    def element_order(self, i: int) -> int:
        k, n = i, 1
        while k != 0:
            k, n = self.mul(k, i), n + 1
        return n


def _require_supported(order: Order) -> None:
    if order.d > 0:
        raise UnsupportedError(
            f"d={order.d}: real quadratic class groups and unit groups are not supported"
        )


def class_group(order: Order) -> ClassGroup:
    _require_supported(order)
    if order.is_z:
        f = QuadForm(1, 1, 0)
        return ClassGroup(order, 1, (f,), (unit_ideal(order),), ((0,),))
    forms = tuple(reduced_forms(order.disc))
    assert forms[0] == principal_form(order.disc)
    lookup = {f: i for i, f in enumerate(forms)}
    table = tuple(
        tuple(lookup[compose_forms(f, g)] for g in forms) for f in forms
    )
    reps = tuple(form_to_ideal(order, f) for f in forms)
    return ClassGroup(order, len(forms), forms, reps, table)


def class_of(J, cg: ClassGroup | None = None) -> int:
    """Index of the ideal class of a nonzero integral or fractional ideal."""
    F = as_fractional(J)
    if cg is None:
        cg = class_group(F.order)
    if F.order.is_z:
        return 0
    return cg.index(ideal_to_form(F))


def class_number_by_generation(order: Order) -> int:
    """Class number as the size of the group generated by small prime classes.

    Independent of the reduced-form enumeration: starts from the classes of
    prime ideals below the form bound ``sqrt(|disc|/3)`` and closes under
    composition.
    """
    from .primes import prime_ideals_up_to

    _require_supported(order)
    if order.is_z:
        return 1
    bound = max(2, isqrt(-order.disc // 3))
    gens = {ideal_to_form(P) for P, _, _ in prime_ideals_up_to(order, bound)}
    group = {principal_form(order.disc)}
    frontier = list(group)
    while frontier:
        new = []
        for f in frontier:
            for g in gens:
                k = compose_forms(f, g)
                if k not in group:
                    group.add(k)
                    new.append(k)
        frontier = new
    return len(group)


@dataclass(frozen=True)
class UnitGroupDescriptor:
    kind: str  # "finite_cyclic" or "infinite_rank1"
    torsion_order: int
    fundamental_unit: FieldElement | None = None

    def __str__(self) -> str:
        return f"finite_cyclic({self.torsion_order})"


def unit_group(order: Order) -> UnitGroupDescriptor:
    _require_supported(order)
    if order.d == -1:
        return UnitGroupDescriptor("finite_cyclic", 4)
    if order.d == -3:
        return UnitGroupDescriptor("finite_cyclic", 6)
    return UnitGroupDescriptor("finite_cyclic", 2)


def units(order: Order) -> list[FieldElement]:
    """Explicit list of the (finitely many) units."""
    _require_supported(order)
    one = order.one
    if order.d == -1:
        i = order.omega
        return [one, -one, i, -i]
    if order.d == -3:
        z = order.omega  # primitive 6th root of unity
        return [z**k for k in range(6)]
    return [one, -one]

