"""Exact arithmetic for quadratic rings of integers and the constructible
right ideals of the semigroups R^x, R^x/R^* and R x| R^x."""

from __future__ import annotations

from .classgroup import ClassGroup, QuadForm, class_group, class_of, unit_group, units
from .constructible import (
    ConstructibleIdeal,
    SaturatedSet,
    Window,
    closure,
    coset_set,
    empty,
    ideal_set,
    independence_check,
    intersect,
    left_mul,
    make_window,
    preimage,
    saturate,
    saturated_equal,
    verify_projection_identities,
    whole,
)
from .errors import BudgetExceeded, DedekindOreError, DomainError, NotCoprimeError, ParseError, UnsupportedError
from .fields import FieldElement, Order, make_order
from .ideals import (
    FractionalIdeal,
    IntegralIdeal,
    ideal_colon,
    ideal_from_generators,
    ideal_intersect,
    ideal_mul,
    ideal_sum,
    principal_ideal,
)
from .orbits import Decomposition, KTheoryRank, StabilizerDescriptor, decompose, ktheory_of_group, orbit_of, stabilizer_of
from .primes import crt_solve, prime_ideals_up_to
from .semigroups import (
    Family,
    QuotientPair,
    SemigroupElement,
    SemigroupKind,
    axb,
    common_upper_bound,
    compose,
    divides,
    embed,
    group_mul,
    make_kind,
    mult,
    principal,
)
from .witnesses import Pi4Instance, Pi5Instance, find_pi4_witness, find_pi5_witness, prime_avoiding_element

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ClassGroup",
    "ConstructibleIdeal",
    "Decomposition",
    "DedekindOreError",
    "DomainError",
    "Family",
    "FieldElement",
    "FractionalIdeal",
    "IntegralIdeal",
    "KTheoryRank",
    "NotCoprimeError",
    "Order",
    "ParseError",
    "Pi4Instance",
    "Pi5Instance",
    "QuadForm",
    "QuotientPair",
    "SaturatedSet",
    "SemigroupElement",
    "SemigroupKind",
    "StabilizerDescriptor",
    "UnsupportedError",
    "Window",
    "axb",
    "class_group",
    "class_of",
    "closure",
    "common_upper_bound",
    "compose",
    "coset_set",
    "crt_solve",
    "decompose",
    "divides",
    "embed",
    "empty",
    "find_pi4_witness",
    "find_pi5_witness",
    "group_mul",
    "ideal_colon",
    "ideal_from_generators",
    "ideal_intersect",
    "ideal_mul",
    "ideal_set",
    "ideal_sum",
    "independence_check",
    "intersect",
    "ktheory_of_group",
    "left_mul",
    "make_kind",
    "make_order",
    "make_window",
    "mult",
    "orbit_of",
    "preimage",
    "prime_avoiding_element",
    "prime_ideals_up_to",
    "principal",
    "principal_ideal",
    "saturate",
    "saturated_equal",
    "stabilizer_of",
    "unit_group",
    "units",
    "verify_projection_identities",
    "whole",
]
