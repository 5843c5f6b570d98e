"""Brute-force oracles that avoid the package's HNF machinery."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from itertools import combinations

from dedekind_ore.fields import FieldElement


def in_lattice(I, u: FieldElement) -> bool:
    """Back substitution against ``Z a + Z (b + c w)``."""
    x, y = Fraction(u.x, u.den), Fraction(u.y, u.den)
    if I.order.is_z:
        return y == 0 and (x / I.a).denominator == 1
    v = y / I.c
    return v.denominator == 1 and ((x - v * I.b) / I.a).denominator == 1


def box(order, B: int, den: int = 1):
    ys = [0] if order.is_z else range(-B, B + 1)
    return [FieldElement(order, x, y, den) for y in ys for x in range(-B, B + 1)]


def lattice_points(I, B: int) -> set:
    """Points of ``I`` with both coordinates in ``[-B, B]``, by coefficient enumeration."""
    pts = set()
    if I.order.is_z:
        return {(k * I.a, 0) for k in range(-B // I.a - 1, B // I.a + 2) if abs(k * I.a) <= B}
    for v in range(-(B // I.c) - 1, B // I.c + 2):
        y = v * I.c
        if abs(y) > B:
            continue
        for u in range(-(B + abs(v * I.b)) // I.a - 1, (B + abs(v * I.b)) // I.a + 2):
            x = u * I.a + v * I.b
            if abs(x) <= B:
                pts.add((x, y))
    return pts


def covolume(gens) -> int:
    """Index in R of the Z-span of integral elements: gcd of the 2x2 minors."""
    vecs = [(g.x, g.y) for g in gens]
    if all(v[1] == 0 for v in vecs):
        return abs(gcd(*[v[0] for v in vecs]))
    g = 0
    for (a, b), (c, d) in combinations(vecs, 2):
        g = gcd(g, a * d - b * c)
    return g
