"""Integral and fractional ideals stored in Hermite normal form.

An integral ideal of a quadratic order is the lattice ``Z*a + Z*(b + c*w)``
with ``c | a``, ``c | b`` and ``0 <= b < a``.  Ideals of Z are ``Z*a`` and are
stored as ``(a, 0, 1)`` so that ``norm == a*c`` holds uniformly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import lattice
from .errors import DomainError
from .fields import FieldElement, Order, from_coords


@dataclass(frozen=True)
class IntegralIdeal:
    order: Order
    a: int
    b: int
    c: int

    # -- lattice views --------------------------------------------------------
    def rows(self) -> list[tuple[int, ...]]:
        if self.order.is_z:
            return [(self.a,)]
        return [(self.a, 0), (self.b, self.c)]

    def basis(self) -> list[FieldElement]:
        return [from_coords(self.order, r) for r in self.rows()]

    @property
    def norm(self) -> int:
        return self.a * self.c

    def is_unit(self) -> bool:
        return self.norm == 1

    def contains(self, u: FieldElement) -> bool:
        if not u.is_integral():
            return False
        if self.order.is_z:
            return u.x % self.a == 0
        if u.y % self.c:
            return False
        return (u.x - (u.y // self.c) * self.b) % self.a == 0

    __contains__ = contains

    def reduce(self, u: FieldElement) -> FieldElement:
        """Canonical representative of ``u`` modulo the ideal (``0 <= y < c``, ``0 <= x < a``)."""
        x, y = u.x, u.y
        if not u.is_integral():
            raise DomainError(f"{u} is not integral")
        if not self.order.is_z:
            q = y // self.c
            x, y = x - q * self.b, y - q * self.c
        return FieldElement(self.order, x % self.a, y)

    def content(self) -> int:
        """Largest rational integer g with the ideal contained in gR."""
        if self.order.is_z:
            return self.a
        return gcd(gcd(self.a, self.b), self.c)

    def conjugate(self) -> IntegralIdeal:
        if self.order.is_z:
            return self
        return ideal_from_generators([g.conjugate() for g in self.basis()], self.order)

    def elements(self, max_height: int | None = None) -> Iterator[FieldElement]:
        """Lattice points ``u*g1 + v*g2`` in a fixed deterministic order.

        Points come by increasing height ``|u| + |v|``; ties are broken by
        ``(|v|, |u|, u < 0, v < 0)``.  The iterator is infinite unless
        ``max_height`` is given.
        """
        rows = self.rows()
        for coeffs in coefficient_order(len(rows), max_height):
            yield from_coords(self.order, lattice.combine(coeffs, rows))

    # -- arithmetic -----------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, IntegralIdeal):
            return ideal_mul(self, other)
        if isinstance(other, (FieldElement, int)):
            return principal_ideal(self.order, other) * self
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other: IntegralIdeal) -> IntegralIdeal:
        return ideal_sum(self, other)

    def __and__(self, other: IntegralIdeal) -> IntegralIdeal:
        return ideal_intersect(self, other)

    def __le__(self, other: IntegralIdeal) -> bool:
        return all(other.contains(g) for g in self.basis())

    def __lt__(self, other: IntegralIdeal) -> bool:
        return self <= other and self != other

    def __pow__(self, n: int) -> IntegralIdeal:
        result = unit_ideal(self.order)
        for _ in range(n):
            result = result * self
        return result

    def __str__(self) -> str:
        from .formats import format_ideal

        return format_ideal(self)

    def __repr__(self) -> str:
        return f"IntegralIdeal({self})"


def coefficient_order(dim: int, max_height: int | None = None) -> Iterator[tuple[int, ...]]:
    heights = itertools.count() if max_height is None else range(max_height + 1)
    for h in heights:
        if dim == 1:
            layer = [(0,)] if h == 0 else [(h,), (-h,)]
        else:
            layer = []
            for v in range(-h, h + 1):
                rest = h - abs(v)
                for u in {rest, -rest}:
                    layer.append((u, v))
            layer.sort(key=lambda t: (abs(t[1]), abs(t[0]), t[0] < 0, t[1] < 0))
        yield from layer


def _from_rows(order: Order, rows: Sequence[Sequence[int]]) -> IntegralIdeal:
    if order.is_z:
        g = 0
        for r in rows:
            g = gcd(g, r[0])
        if g == 0:
            raise DomainError("the zero ideal is not allowed")
        return IntegralIdeal(order, g, 0, 1)
    # columns swapped to (y, x): the echelon form is then ((c, b), (0, a))
    H = lattice.hnf([(r[1], r[0]) for r in rows])
    if len(H) != 2:
        raise DomainError("generators span a lattice of rank < 2 (zero ideal?)")
    (c, b), (_, a) = H
    return IntegralIdeal(order, a, b, c)


def _ideal_closure_rows(order: Order, gens: Iterable[FieldElement]) -> list[tuple[int, ...]]:
    rows = []
    for g in gens:
        rows.append(g.coords())
        if not order.is_z:
            rows.append((g * order.omega).coords())
    return rows


def ideal_from_generators(gens: Sequence[FieldElement], order: Order) -> IntegralIdeal:
    """HNF of the R-module generated by ``gens`` (Z-span of ``g`` and ``g*w``)."""
    gens = list(gens)
    if not gens or all(g.is_zero() for g in gens):
        raise DomainError("empty or all-zero generator list")
    for g in gens:
        if not g.is_integral():
            raise DomainError(f"generator {g} is not integral")
    I = _from_rows(order, _ideal_closure_rows(order, gens))
    if not order.is_z:
        # the Z-span of {g, g*w} is closed under w because w^2 lies in Z + Z*w
        assert all(I.contains(e * order.omega) for e in I.basis())
    return I


def principal_ideal(order: Order, g) -> IntegralIdeal:
    if isinstance(g, int):
        g = FieldElement(order, g)
    return ideal_from_generators([g], order)


def unit_ideal(order: Order) -> IntegralIdeal:
    return IntegralIdeal(order, 1, 0, 1)


def _check_same(I: IntegralIdeal, J: IntegralIdeal) -> None:
    if I.order != J.order:
        raise DomainError("ideals from different orders")


def ideal_mul(I: IntegralIdeal, J: IntegralIdeal) -> IntegralIdeal:
    _check_same(I, J)
    return ideal_from_generators([g * h for g in I.basis() for h in J.basis()], I.order)


def ideal_sum(I: IntegralIdeal, J: IntegralIdeal) -> IntegralIdeal:
    _check_same(I, J)
    return _from_rows(I.order, I.rows() + J.rows())


def ideal_intersect(I: IntegralIdeal, J: IntegralIdeal) -> IntegralIdeal:
    """Lattice intersection from the integer left kernel of ``[B_I; -B_J]``."""
    _check_same(I, J)
    rI, rJ = I.rows(), J.rows()
    stacked = rI + [tuple(-x for x in r) for r in rJ]
    kernel = lattice.left_kernel(stacked)
    common = [lattice.combine(u[: len(rI)], rI) for u in kernel]
    return _from_rows(I.order, common)


def inverse_data(J: IntegralIdeal) -> tuple[IntegralIdeal, int]:
    """``(M, n)`` with ``J^{-1} = M / n``."""
    if J.order.is_z:
        return unit_ideal(J.order), J.a
    # J * conj(J) = N(J) R in a maximal order
    return J.conjugate(), J.norm


def ideal_colon(I: IntegralIdeal, J: IntegralIdeal) -> FractionalIdeal:
    """``(I : J) = {x in K : xJ in I}``, equal to ``I * J^{-1}`` in a Dedekind domain."""
    _check_same(I, J)
    M, n = inverse_data(J)
    return FractionalIdeal(ideal_mul(I, M), n)


def ideals_of_norm_up_to(order: Order, bound: int) -> list[IntegralIdeal]:
    """All nonzero integral ideals of norm at most ``bound``, sorted canonically."""
    out = []
    if order.is_z:
        return [IntegralIdeal(order, m, 0, 1) for m in range(1, bound + 1)]
    for c in range(1, bound + 1):
        for a in range(c, bound // c + 1, c):
            for b in range(0, a, c):
                I = IntegralIdeal(order, a, b, c)
                w = order.omega
                if I.contains(order.element(b, c) * w) and I.contains(order.element(a) * w):
                    out.append(I)
    out.sort(key=ideal_sort_key)
    return out


def ideal_sort_key(I: IntegralIdeal):
    return (I.norm, I.a, I.c, I.b)


@dataclass(frozen=True)
class FractionalIdeal:
    """``num / den`` with ``den`` minimal; ``den == 1`` iff the ideal is integral."""

    num: IntegralIdeal
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if den <= 0:
            raise DomainError("fractional ideal denominator must be positive")
        g = gcd(num.content(), den)
        if g > 1:
            if num.order.is_z:
                num = IntegralIdeal(num.order, num.a // g, 0, 1)
            else:
                num = IntegralIdeal(num.order, num.a // g, num.b // g, num.c // g)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def order(self) -> Order:
        return self.num.order

    def norm(self):
        from fractions import Fraction

        scale = self.den if self.order.is_z else self.den**2
        return Fraction(self.num.norm, scale)

    def is_integral(self) -> bool:
        return self.den == 1

    def contains(self, u: FieldElement) -> bool:
        return self.num.contains(u * self.den)

    __contains__ = contains

    def __mul__(self, other):
        if isinstance(other, FractionalIdeal):
            return FractionalIdeal(ideal_mul(self.num, other.num), self.den * other.den)
        if isinstance(other, IntegralIdeal):
            return FractionalIdeal(ideal_mul(self.num, other), self.den)
        if isinstance(other, FieldElement):
            return scale_fractional(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> FractionalIdeal:
        M, n = inverse_data(self.num)
        return FractionalIdeal(principal_ideal(self.order, self.den) * M, n)

    def __truediv__(self, other: FractionalIdeal) -> FractionalIdeal:
        return self * other.inverse()

    def __and__(self, other: FractionalIdeal) -> FractionalIdeal:
        L = self.den * other.den // gcd(self.den, other.den)
        A = principal_ideal(self.order, L // self.den) * self.num
        B = principal_ideal(self.order, L // other.den) * other.num
        return FractionalIdeal(ideal_intersect(A, B), L)

    def __add__(self, other: FractionalIdeal) -> FractionalIdeal:
        L = self.den * other.den // gcd(self.den, other.den)
        A = principal_ideal(self.order, L // self.den) * self.num
        B = principal_ideal(self.order, L // other.den) * other.num
        return FractionalIdeal(ideal_sum(A, B), L)

    def __le__(self, other: FractionalIdeal) -> bool:
        return all(other.contains(g * FieldElement(self.order, 1, 0, self.den)) for g in self.num.basis())

    def integral_part(self) -> IntegralIdeal:
        """``F ∩ R`` as an integral ideal."""
        n = self.den
        inter = ideal_intersect(self.num, principal_ideal(self.order, n))
        rows = [tuple(x // n for x in r) for r in inter.rows()]
        return _from_rows(self.order, rows)

    def reduce(self, u: FieldElement) -> FieldElement:
        """Canonical representative of the coset ``u + F``."""
        L = u.den * self.den // gcd(u.den, self.den)
        scaled = principal_ideal(self.order, L // self.den) * self.num
        r = scaled.reduce(u * L)
        return r * FieldElement(self.order, 1, 0, L)

    def basis(self) -> list[FieldElement]:
        inv = FieldElement(self.order, 1, 0, self.den)
        return [g * inv for g in self.num.basis()]

    def __str__(self) -> str:
        from .formats import format_fractional

        return format_fractional(self)

    def __repr__(self) -> str:
        return f"FractionalIdeal({self})"


def as_fractional(I) -> FractionalIdeal:
    return I if isinstance(I, FractionalIdeal) else FractionalIdeal(I, 1)


def scale_fractional(F: FractionalIdeal, u: FieldElement) -> FractionalIdeal:
    """``u * F`` for a nonzero field element ``u``."""
    if u.is_zero():
        raise DomainError("cannot scale an ideal by zero")
    num = FieldElement(u.order, u.x, u.y, 1)
    return FractionalIdeal(principal_ideal(u.order, num) * F.num, F.den * u.den)


def principal_fractional(u: FieldElement) -> FractionalIdeal:
    return scale_fractional(FractionalIdeal(unit_ideal(u.order), 1), u)
