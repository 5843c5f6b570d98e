"""Random group elements and instances shared by several test modules."""

from __future__ import annotations

import random

from dedekind_ore.classgroup import units
from dedekind_ore.fields import FieldElement
from dedekind_ore.ideals import ideals_of_norm_up_to
from dedekind_ore.semigroups import random_ring_element
from dedekind_ore.witnesses import Pi4Instance, Pi5Instance


def random_field_element(order, rng: random.Random, radius=6, nonzero=False) -> FieldElement:
    num = random_ring_element(order, rng, radius, nonzero=nonzero)
    return num / FieldElement(order, rng.randint(1, 4))


def random_stabilizer_probe(order, I, rng: random.Random):
    """(beta, alpha) that lands in ``I x| R^*`` about half the time."""
    us = units(order)
    alpha = rng.choice(us) if rng.random() < 0.6 else random_field_element(order, rng, nonzero=True)
    if rng.random() < 0.6:
        beta = I.reduce(order.zero) + sum(
            (rng.randint(-5, 5) * g for g in I.basis()), order.zero
        )
    else:
        beta = random_field_element(order, rng)
    return beta, alpha


def _small_ideals(order, bound=20):
    return ideals_of_norm_up_to(order, bound)


def random_pi4(order, rng: random.Random) -> Pi4Instance:
    small = _small_ideals(order, 12)
    amb = rng.choice(small)
    pieces = [amb * rng.choice(small) for _ in range(rng.randint(0, 3))]
    pairs = []
    for _ in range(rng.randint(0, 3)):
        while True:
            bp, b = (random_ring_element(order, rng, 4) for _ in range(2))
            ap, a = (random_ring_element(order, rng, 4, nonzero=True) for _ in range(2))
            if (bp, ap) != (b, a):
                break
        pairs.append(((bp, ap), (b, a)))
    return Pi4Instance(amb, pieces, pairs)


def random_pi5(order, rng: random.Random) -> Pi5Instance:
    small = _small_ideals(order, 12)
    I = rng.choice(small)
    return Pi5Instance(I, [I * rng.choice(small) for _ in range(rng.randint(0, 3))])
