"""Constructible right ideals in closed form, their closure, and set-level identities.

For the multiplicative families a nonempty constructible ideal is ``I^x``
(nonzero elements, resp. principal ideals, inside ``I``); for the ax+b
semigroup it is ``(r + I) x I^x``.  Both are stored as HNF data, so set
equality is normal-form equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from . import lattice
from .errors import BudgetExceeded, DomainError
from .fields import FieldElement, from_coords
from .formats import format_element_bare
from .ideals import (
    FractionalIdeal,
    IntegralIdeal,
    ideal_colon,
    ideal_intersect,
    ideal_sort_key,
    principal_ideal,
    scale_fractional,
    unit_ideal,
)
from .semigroups import (
    Family,
    SemigroupElement,
    SemigroupKind,
    common_upper_bound,
    compose,
    divides,
    left_divide,
)


@dataclass(frozen=True)
class ConstructibleIdeal:
    kind: SemigroupKind
    ideal: IntegralIdeal | None = None
    residue: FieldElement | None = None

    def __post_init__(self):
        if self.ideal is None:
            object.__setattr__(self, "residue", None)
            return
        if self.kind.variant is Family.AXB:
            r = self.residue if self.residue is not None else self.kind.order.zero
            object.__setattr__(self, "residue", self.ideal.reduce(r))
        elif self.residue is not None:
            raise DomainError("only ax+b constructible ideals carry a residue")

    @property
    def is_empty(self) -> bool:
        return self.ideal is None

    @property
    def norm(self) -> int:
        return 0 if self.ideal is None else self.ideal.norm

    def __contains__(self, p: SemigroupElement) -> bool:
        return contains(self, p)

    def __and__(self, other: ConstructibleIdeal) -> ConstructibleIdeal:
        return intersect(self, other)

    def sort_key(self):
        if self.ideal is None:
            return (0,)
        r = self.residue
        rk = (r.y, r.x) if r is not None else ()
        return (1,) + ideal_sort_key(self.ideal) + rk

    def __str__(self) -> str:
        if self.ideal is None:
            return "{}"
        if self.kind.variant is Family.AXB:
            return f"({format_element_bare(self.residue)} mod {self.ideal}) x {self.ideal}^x"
        return f"{self.ideal}^x"

    def __repr__(self) -> str:
        return f"ConstructibleIdeal({self})"


def empty(kind: SemigroupKind) -> ConstructibleIdeal:
    return ConstructibleIdeal(kind)


def whole(kind: SemigroupKind) -> ConstructibleIdeal:
    return ConstructibleIdeal(kind, unit_ideal(kind.order))


def ideal_set(kind: SemigroupKind, I: IntegralIdeal) -> ConstructibleIdeal:
    return ConstructibleIdeal(kind, I)


def coset_set(kind: SemigroupKind, r: FieldElement | int, I: IntegralIdeal) -> ConstructibleIdeal:
    if isinstance(r, int):
        r = FieldElement(kind.order, r)
    return ConstructibleIdeal(kind, I, r)


def contains(X: ConstructibleIdeal, p: SemigroupElement) -> bool:
    if X.ideal is None:
        return False
    if not X.ideal.contains(p.a):
        return False
    if X.kind.variant is Family.AXB:
        return X.ideal.contains(p.b - X.residue)
    return True


def is_subset(X: ConstructibleIdeal, Y: ConstructibleIdeal) -> bool:
    if X.ideal is None:
        return True
    if Y.ideal is None:
        return False
    if not X.ideal <= Y.ideal:
        return False
    if X.kind.variant is Family.AXB:
        return Y.ideal.contains(X.residue - Y.residue)
    return True


def _solve_mod(a: FieldElement, t: FieldElement, I: IntegralIdeal) -> FieldElement | None:
    """Some ``s`` in R with ``a*s = t (mod I)``, or ``None``."""
    order = I.order
    aR = [a.coords()] if order.is_z else [a.coords(), (a * order.omega).coords()]
    u = lattice.solve(aR + I.rows(), t.coords())
    if u is None:
        return None
    coeffs = u[: len(aR)]
    return from_coords(order, coeffs)


def _coset_meet(r1, I1: IntegralIdeal, r2, I2: IntegralIdeal) -> FieldElement | None:
    """An element of ``(r1 + I1) ∩ (r2 + I2)`` or ``None``."""
    u = lattice.solve(I1.rows() + I2.rows(), (r2 - r1).coords())
    if u is None:
        return None
    i1 = from_coords(I1.order, lattice.combine(u[: len(I1.rows())], I1.rows()))
    return r1 + i1


def left_mul(p: SemigroupElement, X: ConstructibleIdeal) -> ConstructibleIdeal:
    """``pX``: ``a I^x = (aI)^x`` and ``(b,a)((r+I) x I^x) = (b + ar + aI) x (aI)^x``."""
    if X.ideal is None:
        return X
    aI = principal_ideal(X.kind.order, p.a) * X.ideal
    if X.kind.variant is Family.AXB:
        return ConstructibleIdeal(X.kind, aI, p.b + p.a * X.residue)
    return ConstructibleIdeal(X.kind, aI)


def preimage(p: SemigroupElement, X: ConstructibleIdeal) -> ConstructibleIdeal:
    """``p^-1 X = {q in P : pq in X}``.

    The multiplier part is ``J = (I : aR) ∩ R``; for ax+b the translation part
    is the solution set ``s + J`` of ``b + a*s = r (mod I)``, empty when that
    congruence has no solution.
    """
    if X.ideal is None:
        return X
    order = X.kind.order
    J = ideal_colon(X.ideal, principal_ideal(order, p.a)).integral_part()
    if X.kind.variant is Family.AXB:
        s = _solve_mod(p.a, X.residue - p.b, X.ideal)
        if s is None:
            return empty(X.kind)
        return ConstructibleIdeal(X.kind, J, s)
    return ConstructibleIdeal(X.kind, J)


def intersect(X: ConstructibleIdeal, Y: ConstructibleIdeal) -> ConstructibleIdeal:
    if X.kind != Y.kind:
        raise DomainError("constructible ideals of different semigroups")
    if X.ideal is None or Y.ideal is None:
        return empty(X.kind)
    K = ideal_intersect(X.ideal, Y.ideal)
    if X.kind.variant is Family.AXB:
        r = _coset_meet(X.residue, X.ideal, Y.residue, Y.ideal)
        if r is None:
            return empty(X.kind)
        return ConstructibleIdeal(X.kind, K, r)
    return ConstructibleIdeal(X.kind, K)


# -- closure ---------------------------------------------------------------------


def closure(
    kind: SemigroupKind,
    generators: Sequence[SemigroupElement],
    norm_bound: int,
    max_iterations: int = 1000,
    max_size: int = 100_000,
) -> list[ConstructibleIdeal]:
    """Smallest family containing ``P`` and the empty set, closed under left
    multiplication and preimages by the generators and under intersections,
    truncated to ideals of norm ``<= norm_bound``.  Sorted canonically.
    """
    if norm_bound < 1:
        raise DomainError("norm_bound must be at least 1")
    family = {whole(kind), empty(kind)}
    frontier = [whole(kind)]
    iterations = 0
    while frontier:
        iterations += 1
        if iterations > max_iterations or len(family) > max_size:
            raise BudgetExceeded(
                f"closure did not stabilise within {max_iterations} rounds / {max_size} sets"
            )
        new: list[ConstructibleIdeal] = []

        def offer(Y: ConstructibleIdeal) -> None:
            if Y.norm <= norm_bound and Y not in family:
                family.add(Y)
                new.append(Y)

        snapshot = list(family)
        for X in frontier:
            for g in generators:
                offer(left_mul(g, X))
                offer(preimage(g, X))
            for Z in snapshot:
                offer(intersect(X, Z))
        frontier = new
    return sorted(family, key=ConstructibleIdeal.sort_key)


def all_constructible(kind: SemigroupKind, norm_bound: int) -> list[ConstructibleIdeal]:
    """Every nonempty ``(r + I) x I^x`` (resp. ``I^x``) with ``N(I) <= norm_bound``, plus Empty."""
    from .ideals import ideals_of_norm_up_to

    out = [empty(kind)]
    for I in ideals_of_norm_up_to(kind.order, norm_bound):
        if kind.variant is Family.AXB:
            zero = kind.order.zero
            residues = {I.reduce(zero + t) for t in _residue_box(I)}
            out.extend(ConstructibleIdeal(kind, I, r) for r in residues)
        else:
            out.append(ConstructibleIdeal(kind, I))
    return sorted(out, key=ConstructibleIdeal.sort_key)


def _residue_box(I: IntegralIdeal) -> Iterable[FieldElement]:
    order = I.order
    if order.is_z:
        return (FieldElement(order, x) for x in range(I.a))
    return (FieldElement(order, x, y) for y in range(I.c) for x in range(I.a))


# -- independence ------------------------------------------------------------------


@dataclass
class IndependenceResult:
    covered: bool
    index: int | None = None
    witness: SemigroupElement | None = None

    def to_json(self) -> dict:
        if self.covered:
            return {"covered": True, "index": self.index, "witness": None}
        return {"covered": False, "index": None, "witness": str(self.witness)}


def _wrap(kind: SemigroupKind, a: FieldElement, b: FieldElement | None = None) -> SemigroupElement:
    return SemigroupElement(kind, a, b)


def independence_check(
    X: ConstructibleIdeal,
    pieces: Sequence[ConstructibleIdeal],
    max_height: int = 400,
) -> IndependenceResult:
    """Either some piece equals ``X`` or an explicit point of ``X`` outside all pieces.

    Candidates are scanned in the deterministic lattice order of
    :meth:`IntegralIdeal.elements`; the witness is re-verified by membership.
    """
    for k, Y in enumerate(pieces):
        if not is_subset(Y, X):
            raise DomainError(f"piece {k} = {Y} is not contained in {X}")
    for k, Y in enumerate(pieces):
        if Y == X:
            return IndependenceResult(True, index=k)
    if X.ideal is None:
        raise DomainError("the empty set has no proper pieces")
    live = [Y for Y in pieces if Y.ideal is not None]
    kind = X.kind
    if kind.variant is Family.AXB:
        span = 2
        for Y in live:
            span += Y.ideal.norm // X.ideal.norm
        for a in X.ideal.elements(max_height):
            if a.is_zero():
                continue
            active = [Y for Y in live if Y.ideal.contains(a)]
            for t in X.ideal.elements(span):
                b = X.residue + t
                if not any(Y.ideal.contains(b - Y.residue) for Y in active):
                    w = _wrap(kind, a, b)
                    assert contains(X, w) and not any(contains(Y, w) for Y in live)
                    return IndependenceResult(False, witness=w)
    else:
        for a in X.ideal.elements(max_height):
            if a.is_zero():
                continue
            if not any(Y.ideal.contains(a) for Y in live):
                w = _wrap(kind, a)
                assert contains(X, w) and not any(contains(Y, w) for Y in live)
                return IndependenceResult(False, witness=w)
    raise BudgetExceeded(f"no uncovered point found up to lattice height {max_height}")


# -- window identities ---------------------------------------------------------------


@dataclass(frozen=True)
class Window:
    kind: SemigroupKind
    elements: tuple[SemigroupElement, ...]

    def __len__(self) -> int:
        return len(self.elements)


def make_window(kind: SemigroupKind, radius: int, positive_only: bool = False) -> Window:
    """All elements whose coordinates lie in ``[-radius, radius]`` (multipliers nonzero).

    ``positive_only`` restricts multipliers of Z to ``1..radius``.
    """
    order = kind.order
    ys = [0] if order.is_z else range(-radius, radius + 1)
    lo = 1 if (positive_only and order.is_z) else -radius
    ring = [FieldElement(order, x, y) for y in ys for x in range(-radius, radius + 1)]
    mults = [FieldElement(order, x, y) for y in ys for x in range(lo, radius + 1)]
    mults = [u for u in mults if not u.is_zero()]
    if kind.variant is Family.AXB:
        elems = tuple(SemigroupElement(kind, a, b) for a in mults for b in ring)
    else:
        elems = tuple(SemigroupElement(kind, a) for a in mults)
        if kind.variant is Family.PRINCIPAL:
            elems = tuple(dict.fromkeys(elems))
    return Window(kind, elems)


@dataclass
class IdentityReport:
    window_size: int
    failures: dict = field(default_factory=lambda: {"intersection": [], "left_mul": [], "preimage": []})

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def to_json(self) -> dict:
        return {
            "window_size": self.window_size,
            "passed": self.passed,
            "identities": [
                {"identity": name, "ok": not fails, "failures": [str(f) for f in fails[:10]]}
                for name, fails in self.failures.items()
            ],
        }


def verify_projection_identities(
    kind: SemigroupKind,
    p: SemigroupElement,
    X: ConstructibleIdeal,
    Y: ConstructibleIdeal,
    window: Window,
) -> IdentityReport:
    """Pointwise check, on the window, of
    ``1_X 1_Y = 1_{X∩Y}``, ``w in pX <=> w = pq with q in X`` and
    ``w in p^-1 X <=> pw in X``.
    """
    if not window.elements:
        raise DomainError("window must be nonempty")
    XY = intersect(X, Y)
    pX = left_mul(p, X)
    pinvX = preimage(p, X)
    report = IdentityReport(len(window))
    for w in window.elements:
        if (contains(X, w) and contains(Y, w)) != contains(XY, w):
            report.failures["intersection"].append(w)
        q = left_divide(p, w)
        direct = q is not None and contains(X, q)
        if direct != contains(pX, w):
            report.failures["left_mul"].append(w)
        if contains(X, w) and not contains(pX, compose(p, w)):
            report.failures["left_mul"].append(w)
        if contains(pinvX, w) != contains(X, compose(p, w)):
            report.failures["preimage"].append(w)
    return report


# -- saturation in the enveloping group --------------------------------------------------


@dataclass(frozen=True)
class SaturatedSet:
    """``q^-1 . X`` inside G: a fractional ideal ``F`` (Mult/Principal) or
    ``(coset + F) x F^x`` (ax+b), with the coset reduced canonically mod ``F``."""

    kind: SemigroupKind
    ideal: FractionalIdeal
    coset: FieldElement | None = None

    def __post_init__(self):
        if self.kind.variant is Family.AXB:
            c = self.coset if self.coset is not None else self.kind.order.zero
            object.__setattr__(self, "coset", self.ideal.reduce(c))

    def __str__(self) -> str:
        if self.kind.variant is Family.AXB:
            return f"({format_element_bare(self.coset)} mod {self.ideal}) x {self.ideal}^x"
        return f"{self.ideal}^x"


def saturate(X: ConstructibleIdeal, q: SemigroupElement) -> SaturatedSet:
    if X.ideal is None:
        raise DomainError("the empty set is not saturated")
    inv = q.a.inverse()
    F = scale_fractional(FractionalIdeal(X.ideal, 1), inv)
    if X.kind.variant is Family.AXB:
        return SaturatedSet(X.kind, F, (X.residue - q.b) * inv)
    return SaturatedSet(X.kind, F)


def saturated_equal(S: SaturatedSet, T: SaturatedSet) -> bool:
    return S == T


def act(g, S: SaturatedSet) -> SaturatedSet:
    """Left translation ``g . S`` by a group element given by its normal form."""
    kind = S.kind
    if kind.variant is Family.AXB:
        beta, alpha = g
        F = scale_fractional(S.ideal, alpha)
        return SaturatedSet(kind, F, beta + alpha * S.coset)
    if kind.variant is Family.MULT:
        return SaturatedSet(kind, scale_fractional(S.ideal, g))
    return SaturatedSet(kind, S.ideal * g)


def saturated_contains(S: SaturatedSet, g) -> bool:
    kind = S.kind
    if kind.variant is Family.AXB:
        beta, alpha = g
        return S.ideal.contains(alpha) and S.ideal.contains(beta - S.coset)
    if kind.variant is Family.MULT:
        return S.ideal.contains(g)
    return g <= S.ideal


def saturated_intersection(S: SaturatedSet, T: SaturatedSet) -> SaturatedSet | None:
    """Direct intersection in G, ``None`` for the empty set."""
    F = S.ideal & T.ideal
    if S.kind.variant is not Family.AXB:
        return SaturatedSet(S.kind, F)
    # clear denominators, then meet the integral cosets
    L = 1
    for u in (S.coset, T.coset):
        L = L * u.den // gcd(L, u.den)
    for G in (S.ideal, T.ideal):
        L = L * G.den // gcd(L, G.den)
    order = S.kind.order
    scale = FieldElement(order, L)
    I1 = _scaled_integral(S.ideal, L)
    I2 = _scaled_integral(T.ideal, L)
    r = _coset_meet(S.coset * scale, I1, T.coset * scale, I2)
    if r is None:
        return None
    return SaturatedSet(S.kind, F, r * FieldElement(order, 1, 0, L))


def _scaled_integral(F: FractionalIdeal, L: int) -> IntegralIdeal:
    assert L % F.den == 0
    return principal_ideal(F.order, L // F.den) * F.num


def saturated_meet_via_bound(
    X1: ConstructibleIdeal, q1: SemigroupElement, X2: ConstructibleIdeal, q2: SemigroupElement
) -> SaturatedSet | None:
    """``(q1^-1 . X1) ∩ (q2^-1 . X2) = q^-1 . ((q q1^-1) X1 ∩ (q q2^-1) X2)`` for an upper bound q."""
    q = common_upper_bound(q1, q2)
    r1, r2 = divides(q1, q), divides(q2, q)
    Z = intersect(left_mul(r1, X1), left_mul(r2, X2))
    if Z.is_empty:
        return None
    return saturate(Z, q)


def parse_constructible(text: str, kind: SemigroupKind) -> ConstructibleIdeal:
    """Inverse of ``str``: ``{}``, ``[I]^x`` or ``(r mod [I]) x [I]^x``."""
    import re

    from .errors import ParseError
    from .formats import parse_element, parse_ideal

    s = text.strip()
    if s == "{}":
        return empty(kind)
    order = kind.order
    m = re.fullmatch(r"\((.+?)\s+mod\s+(\[.*?\])\)\s*x\s*(\[.*?\])\^x", s)
    if m:
        if kind.variant is not Family.AXB:
            raise ParseError(f"coset sets only exist for ax+b, got {text!r}")
        I = parse_ideal(m.group(2), order)
        if parse_ideal(m.group(3), order) != I:
            raise ParseError(f"mismatched ideals in {text!r}")
        return ConstructibleIdeal(kind, I, parse_element(m.group(1), order))
    m = re.fullmatch(r"(\[.*\]|<.*>)\^x", s)
    if m:
        I = parse_ideal(m.group(1), order)
        if kind.variant is Family.AXB:
            return ConstructibleIdeal(kind, I, order.zero)
        return ConstructibleIdeal(kind, I)
    raise ParseError(f"cannot parse constructible ideal {text!r}")
