"""Rings of integers of Q and of quadratic fields Q(sqrt d), and exact field elements."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError


class OmegaKind(enum.Enum):
    SQRT_D = "sqrt_d"
    HALF_ONE_PLUS_SQRT_D = "half_one_plus_sqrt_d"
    NONE = "none"  # base ring Z


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


@dataclass(frozen=True)
class Order:
    """Ring of integers Z[w] of Q(sqrt d); ``d == 0`` stands for Z itself.

    ``w`` is ``sqrt d`` when ``d % 4 in (2, 3)`` and ``(1 + sqrt d)/2`` when
    ``d % 4 == 1``.  Every element is ``x + y*w`` with integer ``x, y``.
    """

    d: int
    disc: int
    omega_kind: OmegaKind

    @property
    def is_z(self) -> bool:
        return self.d == 0

    @property
    def degree(self) -> int:
        return 1 if self.d == 0 else 2

    @property
    def omega_square(self) -> tuple[int, int]:
        # w^2 = m0 + m1*w
        if self.omega_kind is OmegaKind.SQRT_D:
            return self.d, 0
        if self.omega_kind is OmegaKind.HALF_ONE_PLUS_SQRT_D:
            return (self.d - 1) // 4, 1
        return 0, 0

    @property
    def is_imaginary(self) -> bool:
        return self.d < 0

    def __str__(self) -> str:
        if self.is_z:
            return "Z"
        w = "sqrt(%d)" % self.d if self.omega_kind is OmegaKind.SQRT_D else "(1+sqrt(%d))/2" % self.d
        return f"O_K, K=Q(sqrt({self.d})), w={w}, disc={self.disc}"

    def element(self, x: int, y: int = 0, den: int = 1) -> FieldElement:
        return FieldElement(self, x, y, den)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1, 0, 1)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0, 0, 1)

    @property
    def omega(self) -> FieldElement:
        if self.is_z:
            raise DomainError("Z has no quadratic generator")
        return FieldElement(self, 0, 1, 1)


def make_order(d: int) -> Order:
    """Build the ring of integers for ``d`` (squarefree, ``!= 1``) or Z for ``d == 0``."""
    if d == 0:
        return Order(0, 1, OmegaKind.NONE)
    if d == 1 or not is_squarefree(d):
        raise DomainError(f"d={d} is not a squarefree integer != 1")
    if d % 4 == 1:
        return Order(d, d, OmegaKind.HALF_ONE_PLUS_SQRT_D)
    return Order(d, 4 * d, OmegaKind.SQRT_D)


@dataclass(frozen=True)
class FieldElement:
    """``(x + y*w) / den`` in lowest terms, ``den >= 1``."""

    order: Order
    x: int
    y: int = 0
    den: int = 1

    def __post_init__(self):
        x, y, den = self.x, self.y, self.den
        if self.order.is_z and y:
            raise DomainError("elements of Z have no w-coordinate")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            x, y, den = -x, -y, -den
        g = gcd(gcd(x, y), den)
        if g > 1:
            x, y, den = x // g, y // g, den // g
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "den", den)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.order != self.order:
                raise DomainError("elements from different orders")
            return other
        if isinstance(other, int):
            return FieldElement(self.order, other)
        if isinstance(other, Fraction):
            return FieldElement(self.order, other.numerator, 0, other.denominator)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(
            self.order,
            self.x * o.den + o.x * self.den,
            self.y * o.den + o.y * self.den,
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.order, -self.x, -self.y, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m0, m1 = self.order.omega_square
        yy = self.y * o.y
        return FieldElement(
            self.order,
            self.x * o.x + m0 * yy,
            self.x * o.y + self.y * o.x + m1 * yy,
            self.den * o.den,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.order.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> FieldElement:
        kind = self.order.omega_kind
        if kind is OmegaKind.SQRT_D:
            return FieldElement(self.order, self.x, -self.y, self.den)
        if kind is OmegaKind.HALF_ONE_PLUS_SQRT_D:
            # conj(w) = 1 - w
            return FieldElement(self.order, self.x + self.y, -self.y, self.den)
        return self

    def norm(self) -> Fraction:
        """Field norm down to Q (for Z: the element itself)."""
        if self.order.is_z:
            return Fraction(self.x, self.den)
        m0, m1 = self.order.omega_square
        x, y = self.x, self.y
        # N(x + y w) = x^2 + m1*x*y - m0*y^2
        return Fraction(x * x + m1 * x * y - m0 * y * y, self.den * self.den)

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.order.is_z:
            return FieldElement(self.order, self.den, 0, self.x)
        n = self.norm()
        c = self.conjugate()
        return FieldElement(self.order, c.x * n.denominator, c.y * n.denominator, c.den * n.numerator)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_integral(self) -> bool:
        return self.den == 1

    def is_unit(self) -> bool:
        """True for units of the order (only torsion units for Z and imaginary fields)."""
        return self.is_integral() and abs(self.norm()) == 1

    def coords(self) -> tuple[int, ...]:
        """Integer coordinates in the basis ``{1, w}``; requires an integral element."""
        if self.den != 1:
            raise DomainError(f"{self} is not integral")
        return (self.x,) if self.order.is_z else (self.x, self.y)

    def __str__(self) -> str:
        from .formats import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"FieldElement({self})"


def elem_mul(u: FieldElement, v: FieldElement) -> FieldElement:
    return u * v


def elem_inv(u: FieldElement) -> FieldElement:
    return u.inverse()


def elem_norm(u: FieldElement) -> Fraction:
    return u.norm()


def from_coords(order: Order, coords) -> FieldElement:
    if order.is_z:
        return FieldElement(order, coords[0])
    return FieldElement(order, coords[0], coords[1])
