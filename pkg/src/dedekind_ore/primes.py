"""Prime ideals via splitting of rational primes, and the Chinese remainder theorem."""

from __future__ import annotations

from typing import Sequence

from . import lattice
from .errors import DomainError, NotCoprimeError
from .fields import FieldElement, OmegaKind, Order, from_coords
from .ideals import IntegralIdeal, ideal_from_generators, ideal_mul, ideal_sum, principal_ideal


def rational_primes(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(bound + 1) if sieve[p]]


def kronecker(D: int, p: int) -> int:
    """Kronecker symbol ``(D/p)`` for a rational prime ``p``."""
    if D % p == 0:
        return 0
    if p == 2:
        return 1 if D % 8 in (1, 7) else -1
    r = pow(D % p, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def _omega_roots(order: Order, p: int) -> list[int]:
    """Roots mod p of the minimal polynomial of w."""
    if order.omega_kind is OmegaKind.SQRT_D:
        return [t for t in range(p) if (t * t - order.d) % p == 0]
    m0 = (order.d - 1) // 4
    return [t for t in range(p) if (t * t - t - m0) % p == 0]


def prime_ideals_up_to(order: Order, bound: int) -> list[tuple[IntegralIdeal, int, bool]]:
    """``(P, residue degree, ramified)`` for every prime ideal of norm ``<= bound``."""
    if bound < 2:
        raise DomainError("bound must be at least 2")
    out = []
    for p in rational_primes(bound):
        if order.is_z:
            out.append((principal_ideal(order, p), 1, False))
            continue
        k = kronecker(order.disc, p)
        if k == -1:
            if p * p <= bound:
                out.append((principal_ideal(order, p), 2, False))
            continue
        roots = _omega_roots(order, p)
        primes = sorted(
            {ideal_from_generators([order.element(p), order.element(-t, 1)], order) for t in roots},
            key=lambda P: (P.a, P.b, P.c),
        )
        assert len(primes) == (1 if k == 0 else 2)
        for P in primes:
            out.append((P, 1, k == 0))
    out.sort(key=lambda e: (e[0].norm, e[0].a, e[0].b))
    return out


def bezout_split(I: IntegralIdeal, J: IntegralIdeal) -> tuple[FieldElement, FieldElement] | None:
    """``(e, f)`` with ``e in I``, ``f in J`` and ``e + f == 1``, or ``None`` if ``I + J != R``."""
    rows = I.rows() + J.rows()
    target = (1,) + (0,) * (len(rows[0]) - 1)
    u = lattice.solve(rows, target)
    if u is None:
        return None
    k = len(I.rows())
    e = from_coords(I.order, lattice.combine(u[:k], I.rows()))
    f = from_coords(I.order, lattice.combine(u[k:], J.rows()))
    return e, f


def crt_solve(congruences: Sequence[tuple[FieldElement, IntegralIdeal]]) -> FieldElement:
    """``x`` with ``x = r_i mod I_i`` for pairwise coprime ``I_i``, reduced mod their product."""
    congruences = list(congruences)
    if not congruences:
        raise DomainError("no congruences given")
    for i in range(len(congruences)):
        for j in range(i + 1, len(congruences)):
            Ii, Ij = congruences[i][1], congruences[j][1]
            if not ideal_sum(Ii, Ij).is_unit():
                raise NotCoprimeError(i, j, Ii, Ij)
    x, M = congruences[0][1].reduce(congruences[0][0]), congruences[0][1]
    for r, I in congruences[1:]:
        e, f = bezout_split(M, I)  # e in M, f in I, e + f = 1
        # f = 1 mod M, e = 1 mod I
        M = ideal_mul(M, I)
        x = M.reduce(x * f + r * e)
    for r, I in congruences:
        if not I.contains(x - r):
            raise AssertionError("CRT solution failed re-verification")
    return x
