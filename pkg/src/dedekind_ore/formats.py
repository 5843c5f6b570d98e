"""Text formats for elements, ideals, semigroup elements and constructible ideals.

Emission and parsing are exact inverses on canonical output:

* field element   ``(x+y*w)/den``  (``/den`` omitted when 1; Z prints ``(x)``)
* integral ideal  ``[a, b+c*w]``   (Z prints ``[a]``)
* fractional      ``[a, b+c*w]/den``
* generators      ``<g1, g2, ...>`` (input only)
"""

from __future__ import annotations

import re

from .errors import DomainError, ParseError
from .fields import FieldElement, Order

_INT = re.compile(r"^([+-]?\d+)$")
_FULL = re.compile(r"^([+-]?\d+)([+-])(\d*)\*?w$")
_WONLY = re.compile(r"^([+-]?)(\d*)\*?w$")


def _core(u: FieldElement) -> str:
    if u.order.is_z:
        return str(u.x)
    sign = "+" if u.y >= 0 else "-"
    return f"{u.x}{sign}{abs(u.y)}*w"


def format_element(u: FieldElement) -> str:
    s = f"({_core(u)})"
    return s if u.den == 1 else f"{s}/{u.den}"


def format_element_bare(u: FieldElement) -> str:
    """Element without outer parentheses where unambiguous (used inside pairs)."""
    if u.den == 1:
        return _core(u)
    if u.order.is_z:
        return f"{u.x}/{u.den}"
    return f"({_core(u)})/{u.den}"


def parse_element(text: str, order: Order) -> FieldElement:
    s = re.sub(r"\s+", "", text)
    den = 1
    m = re.match(r"^(.*)/(\d+)$", s)
    if m:
        s, den = m.group(1), int(m.group(2))
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
    while s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if (m := _INT.match(s)):
        x, y = int(m.group(1)), 0
    elif (m := _FULL.match(s)):
        x = int(m.group(1))
        y = int(m.group(3) or "1") * (-1 if m.group(2) == "-" else 1)
    elif (m := _WONLY.match(s)):
        x = 0
        y = int(m.group(2) or "1") * (-1 if m.group(1) == "-" else 1)
    else:
        raise ParseError(f"cannot parse field element {text!r}")
    if order.is_z and y:
        raise ParseError(f"element {text!r} has a w-coordinate but the ring is Z")
    return FieldElement(order, x, y, den)


def format_ideal(I) -> str:
    if I.order.is_z:
        return f"[{I.a}]"
    return f"[{I.a}, {I.b}+{I.c}*w]"


def format_fractional(F) -> str:
    s = format_ideal(F.num)
    return s if F.den == 1 else f"{s}/{F.den}"


def _split_top(s: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "([<":
            depth += 1
        elif ch in ")]>":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_ideal(text: str, order: Order):
    """Parse ``[a, b+c*w]``, ``[a]`` (Z) or ``<g1, ...>``; returns an IntegralIdeal."""
    from .ideals import IntegralIdeal, ideal_from_generators

    s = re.sub(r"\s+", "", text)
    if s.startswith("<") and s.endswith(">"):
        gens = [parse_element(g, order) for g in _split_top(s[1:-1], ",") if g]
        try:
            return ideal_from_generators(gens, order)
        except DomainError as exc:
            raise ParseError(str(exc)) from exc
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"cannot parse ideal {text!r}")
    body = _split_top(s[1:-1], ",")
    try:
        if order.is_z:
            if len(body) != 1:
                raise ParseError(f"ideals of Z are written [a], got {text!r}")
            a = int(body[0])
            if a <= 0:
                raise ParseError("ideal generator must be positive")
            return IntegralIdeal(order, a, 0, 1)
        if len(body) != 2:
            raise ParseError(f"cannot parse ideal {text!r}")
        a = int(body[0])
        second = parse_element(body[1], order)
    except ValueError as exc:
        raise ParseError(f"cannot parse ideal {text!r}") from exc
    b, c = second.x, second.y
    if not (a > 0 and c > 0 and a % c == 0 and b % c == 0 and 0 <= b < a):
        raise ParseError(f"{text!r} is not in Hermite normal form")
    I = IntegralIdeal(order, a, b, c)
    w = order.omega
    if not (I.contains(order.element(a) * w) and I.contains(second * w)):
        raise ParseError(f"{text!r} is a lattice but not an ideal")
    return I


def parse_fractional(text: str, order: Order):
    from .ideals import FractionalIdeal

    s = re.sub(r"\s+", "", text)
    m = re.match(r"^(.*[\]>])/(\d+)$", s)
    if m:
        return FractionalIdeal(parse_ideal(m.group(1), order), int(m.group(2)))
    return FractionalIdeal(parse_ideal(s, order), 1)
