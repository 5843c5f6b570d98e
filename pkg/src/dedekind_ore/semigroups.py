"""The semigroups R^x, R^x/R^* and R x| R^x, and their groups of left quotients.

Elements of the enveloping group are kept as raw pairs ``[p^-1 . x]`` for
audit, together with a canonical normal form that decides equality:

* ``Mult``:      the field element ``x / p``
* ``Axb``:       ``((b' - b)/a, a'/a)`` in K x| K^x for ``p = (b, a)``, ``x = (b', a')``
* ``Principal``: the principal fractional ideal ``(x) / (p)``
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from math import isqrt
from typing import Union

from .errors import DomainError, ParseError
from .fields import FieldElement, Order
from .formats import format_element, format_element_bare, format_fractional, parse_element, parse_ideal
from .ideals import FractionalIdeal, IntegralIdeal, principal_fractional, principal_ideal


class Family(enum.Enum):
    MULT = "mult"
    PRINCIPAL = "principal"
    AXB = "axb"


@dataclass(frozen=True)
class SemigroupKind:
    variant: Family
    order: Order

    def __str__(self) -> str:
        return f"{self.variant.value} over {self.order}"


def make_kind(variant: str | Family, order: Order) -> SemigroupKind:
    return SemigroupKind(Family(variant), order)


@dataclass(frozen=True, eq=False)
class SemigroupElement:
    """One element of a semigroup family.

    ``a`` is the multiplier (Mult/Axb) or a cached generator of the principal
    ideal (Principal); ``b`` is the translation part of an Axb element.
    Principal elements compare by their ideal, never by the generator.
    """

    kind: SemigroupKind
    a: FieldElement
    b: FieldElement | None = None
    ideal: IntegralIdeal | None = field(default=None)

    def __post_init__(self):
        if self.a.is_zero() or not self.a.is_integral():
            raise DomainError(f"multiplier {self.a} must be a nonzero integral element")
        variant = self.kind.variant
        if variant is Family.AXB:
            if self.b is None or not self.b.is_integral():
                raise DomainError("Axb elements need an integral translation part")
        elif variant is Family.PRINCIPAL and self.ideal is None:
            object.__setattr__(self, "ideal", principal_ideal(self.kind.order, self.a))

    @property
    def key(self):
        if self.kind.variant is Family.PRINCIPAL:
            return (self.kind, self.ideal)
        return (self.kind, self.b, self.a)

    def __eq__(self, other):
        return isinstance(other, SemigroupElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __mul__(self, other: SemigroupElement) -> SemigroupElement:
        return compose(self, other)

    def __str__(self) -> str:
        v = self.kind.variant
        if v is Family.MULT:
            return f"m:{format_element(self.a)}"
        if v is Family.AXB:
            return f"axb:({format_element_bare(self.b)}|{format_element_bare(self.a)})"
        return f"p:{self.ideal}"

    def __repr__(self) -> str:
        return f"SemigroupElement({self})"


def mult(kind: SemigroupKind, a) -> SemigroupElement:
    if isinstance(a, int):
        a = FieldElement(kind.order, a)
    return SemigroupElement(kind, a)


def axb(kind: SemigroupKind, b, a) -> SemigroupElement:
    if isinstance(a, int):
        a = FieldElement(kind.order, a)
    if isinstance(b, int):
        b = FieldElement(kind.order, b)
    return SemigroupElement(kind, a, b)


def find_generator(I: IntegralIdeal) -> FieldElement | None:
    """A generator of ``I`` by short-vector search, or ``None`` if ``I`` is not principal.

    Only for Z and imaginary quadratic orders, where the norm form is
    positive definite and a generator is an element of norm ``N(I)``.
    """
    order = I.order
    if order.is_z:
        return FieldElement(order, I.a)
    if order.d > 0:
        from .errors import UnsupportedError

        raise UnsupportedError("principality testing needs an imaginary quadratic order")
    target = I.norm
    m1 = order.omega_square[1]
    # N(x + y w) = (x + m1*y/2)^2 + |disc|*y^2/4
    ymax = isqrt(4 * target // -order.disc) + 1
    xmax = isqrt(target) + 1
    best = None
    for y in range(-ymax, ymax + 1):
        shift = (m1 * y) // 2
        for x in range(-xmax - shift - 1, xmax - shift + 2):
            g = FieldElement(order, x, y)
            if g.is_zero() or g.norm() != target or not I.contains(g):
                continue
            key = (abs(y), abs(x), x < 0, y < 0)
            if best is None or key < best[0]:
                best = (key, g)
    return None if best is None else best[1]


def principal(kind: SemigroupKind, I) -> SemigroupElement:
    """Principal-ideal element from an ideal or from a generator."""
    if isinstance(I, (FieldElement, int)):
        g = I if isinstance(I, FieldElement) else FieldElement(kind.order, I)
        return SemigroupElement(kind, g)
    g = find_generator(I)
    if g is None:
        raise DomainError(f"{I} is not principal")
    return SemigroupElement(kind, g, None, I)


def identity(kind: SemigroupKind) -> SemigroupElement:
    one = kind.order.one
    if kind.variant is Family.AXB:
        return SemigroupElement(kind, one, kind.order.zero)
    return SemigroupElement(kind, one)


def _same(s: SemigroupElement, t: SemigroupElement) -> None:
    if s.kind != t.kind:
        raise DomainError("elements of different semigroups")


def compose(s: SemigroupElement, t: SemigroupElement) -> SemigroupElement:
    _same(s, t)
    if s.kind.variant is Family.AXB:
        return SemigroupElement(s.kind, s.a * t.a, s.b + s.a * t.b)
    return SemigroupElement(s.kind, s.a * t.a)


def divides(p: SemigroupElement, q: SemigroupElement) -> SemigroupElement | None:
    """``r`` with ``q == r * p`` if ``p <= q`` (i.e. ``q`` in ``Pp``), else ``None``."""
    _same(p, q)
    y = q.a / p.a
    if not y.is_integral():
        return None
    if p.kind.variant is Family.AXB:
        return SemigroupElement(p.kind, y, q.b - y * p.b)
    return SemigroupElement(p.kind, y)


def left_divide(p: SemigroupElement, w: SemigroupElement) -> SemigroupElement | None:
    """``q`` with ``p * q == w`` if ``w`` in ``pP``, else ``None``."""
    _same(p, w)
    y = w.a / p.a
    if not y.is_integral():
        return None
    if p.kind.variant is Family.AXB:
        x = (w.b - p.b) / p.a
        if not x.is_integral():
            return None
        return SemigroupElement(p.kind, y, x)
    return SemigroupElement(p.kind, y)


def common_upper_bound(p1: SemigroupElement, p2: SemigroupElement) -> SemigroupElement:
    """Some ``q`` with ``p1 <= q`` and ``p2 <= q``; not necessarily least."""
    _same(p1, p2)
    if divides(p1, p2) is not None:
        q = p2
    elif divides(p2, p1) is not None:
        q = p1
    elif p1.kind.variant is Family.AXB:
        # (a1*b2, a2) * (b1, a1) == q == (a2*b1, a1) * (b2, a2)
        q = SemigroupElement(p1.kind, p1.a * p2.a, p1.a * p2.b + p2.a * p1.b)
    else:
        q = compose(p1, p2)
    assert divides(p1, q) is not None and divides(p2, q) is not None
    return q


# -- random sampling -----------------------------------------------------------


def random_ring_element(order: Order, rng: random.Random, radius: int, nonzero: bool = False) -> FieldElement:
    while True:
        x = rng.randint(-radius, radius)
        y = 0 if order.is_z else rng.randint(-radius, radius)
        u = FieldElement(order, x, y)
        if not (nonzero and u.is_zero()):
            return u


def random_element(kind: SemigroupKind, rng: random.Random, radius: int = 6) -> SemigroupElement:
    a = random_ring_element(kind.order, rng, radius, nonzero=True)
    if kind.variant is Family.AXB:
        return SemigroupElement(kind, a, random_ring_element(kind.order, rng, radius))
    return SemigroupElement(kind, a)


@dataclass
class OreReport:
    kind: SemigroupKind
    samples: int
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def ore_check(kind: SemigroupKind, sample_size: int, seed: int = 0) -> OreReport:
    """Sampled check of cancellativity and upward directedness."""
    rng = random.Random(seed)
    report = OreReport(kind, sample_size)
    for _ in range(sample_size):
        p = random_element(kind, rng)
        x = random_element(kind, rng)
        y = random_element(kind, rng)
        if x != y:
            if compose(p, x) == compose(p, y):
                report.counterexamples.append(("left cancellation", p, x, y))
            if compose(x, p) == compose(y, p):
                report.counterexamples.append(("right cancellation", p, x, y))
        q = common_upper_bound(x, y)
        if divides(x, q) is None or divides(y, q) is None:
            report.counterexamples.append(("upper bound", x, y, q))
    return report


# -- enveloping group ------------------------------------------------------------

NormalForm = Union[FieldElement, tuple, FractionalIdeal]


def normal_form(kind: SemigroupKind, p: SemigroupElement, x: SemigroupElement) -> NormalForm:
    if kind.variant is Family.MULT:
        return x.a / p.a
    if kind.variant is Family.AXB:
        return ((x.b - p.b) / p.a, x.a / p.a)
    return principal_fractional(x.a / p.a)


@dataclass(frozen=True, eq=False)
class QuotientPair:
    """The class ``[p^-1 . x]`` of the enveloping group, equality by normal form."""

    p: SemigroupElement
    x: SemigroupElement

    def __post_init__(self):
        _same(self.p, self.x)

    @property
    def kind(self) -> SemigroupKind:
        return self.p.kind

    @property
    def normal_form(self) -> NormalForm:
        return normal_form(self.kind, self.p, self.x)

    def __eq__(self, other):
        return isinstance(other, QuotientPair) and self.kind == other.kind and self.normal_form == other.normal_form

    def __hash__(self):
        return hash((self.kind, self.normal_form))

    def __mul__(self, other: QuotientPair) -> QuotientPair:
        return group_mul(self, other)

    def inverse(self) -> QuotientPair:
        return QuotientPair(self.x, self.p)

    def __str__(self) -> str:
        return format_group_element(self.kind, self.normal_form)

    def __repr__(self) -> str:
        return f"QuotientPair([{self.p}^-1 . {self.x}] = {self})"


def format_group_element(kind: SemigroupKind, nf: NormalForm) -> str:
    if kind.variant is Family.AXB:
        beta, alpha = nf
        return f"g:({format_element_bare(beta)}|{format_element_bare(alpha)})"
    if kind.variant is Family.MULT:
        return f"g:{format_element(nf)}"
    return f"g:{format_fractional(nf)}"


def embed(p: SemigroupElement) -> QuotientPair:
    return QuotientPair(identity(p.kind), p)


def quotient_normal_form(g: QuotientPair) -> NormalForm:
    return g.normal_form


def group_identity(kind: SemigroupKind) -> QuotientPair:
    e = identity(kind)
    return QuotientPair(e, e)


def group_mul(g1: QuotientPair, g2: QuotientPair, upper_bound: SemigroupElement | None = None) -> QuotientPair:
    """Product through the inductive-limit picture.

    With ``y >= x1`` and ``y >= p2``:
    ``[p1^-1 x1][p2^-1 x2] = [((y x1^-1) p1)^-1 . ((y p2^-1) x2)]``.
    """
    p1, x1 = g1.p, g1.x
    p2, x2 = g2.p, g2.x
    y = upper_bound if upper_bound is not None else common_upper_bound(x1, p2)
    r1 = divides(x1, y)
    r2 = divides(p2, y)
    if r1 is None or r2 is None:
        raise DomainError(f"{y} is not an upper bound of {x1} and {p2}")
    return QuotientPair(compose(r1, p1), compose(r2, x2))


def direct_mul(kind: SemigroupKind, n1: NormalForm, n2: NormalForm) -> NormalForm:
    """Product of normal forms in K^x, K x| K^x, or the principal fractional ideals."""
    if kind.variant is Family.AXB:
        (b1, a1), (b2, a2) = n1, n2
        return (b1 + a1 * b2, a1 * a2)
    return n1 * n2


# -- parsing ---------------------------------------------------------------------


def parse_semigroup_element(text: str, kind: SemigroupKind) -> SemigroupElement:
    """Read ``axb:(b|a)``, ``m:x`` or ``p:[I]``; the prefix may be dropped,
    and ``(b,a)`` is accepted for ax+b."""
    from .formats import _split_top

    s = text.strip()
    prefix, sep, body = s.partition(":")
    if not sep:
        # bare form, read according to the kind
        prefix, body = {Family.MULT: "m", Family.AXB: "axb", Family.PRINCIPAL: "p"}[kind.variant], s
    order = kind.order
    if prefix == "m" and kind.variant is Family.MULT:
        return SemigroupElement(kind, parse_element(body, order))
    if prefix == "axb" and kind.variant is Family.AXB:
        body = body.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"cannot parse {text!r}")
        parts = _split_top(body[1:-1], "|")
        if len(parts) == 1:
            parts = _split_top(body[1:-1], ",")
        if len(parts) != 2:
            raise ParseError(f"cannot parse {text!r}")
        return SemigroupElement(kind, parse_element(parts[1], order), parse_element(parts[0], order))
    if prefix == "p" and kind.variant is Family.PRINCIPAL:
        body = body.strip()
        if body.startswith("[") or body.startswith("<"):
            return principal(kind, parse_ideal(body, order))
        return principal(kind, parse_element(body, order))
    raise ParseError(f"cannot parse {text!r} as an element of {kind}")
