"""Orbits of the enveloping group on saturated constructible sets, stabilizers,
and the class-group indexed K-theory decomposition.

Group K-theory is only evaluated where the ranks are forced (finite cyclic
groups by characters, free abelian factors by the Kunneth recursion).  Any
other stabilizer stays symbolic unless a user table supplies ranks.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .classgroup import class_group, class_of, unit_group
from .constructible import ConstructibleIdeal, SaturatedSet, act, saturate
from .errors import DomainError, ParseError
from .fields import FieldElement
from .formats import format_element_bare
from .ideals import FractionalIdeal, IntegralIdeal, as_fractional
from .semigroups import Family, SemigroupKind, identity

ASSUMPTIONS = (
    "enveloping group amenable",
    "strong Baum-Connes holds for amenable groups",
    "constructible right ideals independent",
)
AMENABILITY_NOTE = {
    Family.MULT: "K^x is abelian, hence amenable",
    Family.PRINCIPAL: "the group of principal fractional ideals is abelian, hence amenable",
    Family.AXB: "K x| K^x is solvable, hence amenable",
}


class StabKind(enum.Enum):
    TRIVIAL = "trivial"
    FINITE_CYCLIC = "finite_cyclic"
    FREE_ABELIAN_TIMES_CYCLIC = "free_abelian_times_cyclic"
    IDEAL_SEMIDIRECT_UNITS = "ideal_semidirect_units"


@dataclass(frozen=True)
class StabilizerDescriptor:
    """A stabilizer subgroup with a membership test.

    ``IDEAL_SEMIDIRECT_UNITS`` describes ``I x| R^*`` conjugated by the
    translation ``shift``: ``(beta, alpha)`` belongs iff ``alpha`` is a unit and
    ``beta - (1 - alpha) * shift`` lies in ``ideal``.
    """

    kind: StabKind
    w: int = 1
    rank: int = 0
    ideal: FractionalIdeal | None = None
    shift: FieldElement | None = None

    @property
    def key(self) -> str:
        """Canonical group-descriptor string, used for K-theory table lookups."""
        if self.kind is StabKind.TRIVIAL:
            return "1"
        if self.kind is StabKind.FINITE_CYCLIC:
            return f"Z/{self.w}"
        if self.kind is StabKind.FREE_ABELIAN_TIMES_CYCLIC:
            return f"Z^{self.rank} x Z/{self.w}"
        return f"Z^{self.rank} x| Z/{self.w}"

    def __str__(self) -> str:
        if self.kind is StabKind.IDEAL_SEMIDIRECT_UNITS:
            s = f"{self.ideal} x| Z/{self.w}"
            if self.shift is not None and not self.shift.is_zero():
                s += f" (shifted by {format_element_bare(self.shift)})"
            return s
        return self.key

    def contains(self, g) -> bool:
        """Membership of a group element given by its normal form."""
        if self.kind is StabKind.TRIVIAL:
            if isinstance(g, FractionalIdeal):
                return g.is_integral() and g.num.is_unit()
            if isinstance(g, tuple):
                beta, alpha = g
                return beta.is_zero() and alpha == alpha.order.one
            return g == g.order.one
        if self.kind is StabKind.FINITE_CYCLIC:
            return g.is_unit()
        if self.kind is StabKind.IDEAL_SEMIDIRECT_UNITS:
            beta, alpha = g
            if not alpha.is_unit():
                return False
            r = self.shift if self.shift is not None else alpha.order.zero
            return self.ideal.contains(beta - (alpha.order.one - alpha) * r)
        raise DomainError(f"no membership test for {self.key}")


@dataclass(frozen=True)
class KTheoryRank:
    """``Known`` ranks (``symbolic is None``) or a symbolic group description."""

    rank0: int | None = None
    rank1: int | None = None
    symbolic: str | None = None
    note: str = ""

    @property
    def known(self) -> bool:
        return self.symbolic is None

    def __str__(self) -> str:
        if self.known:
            return f"({self.rank0},{self.rank1})"
        return f"K_*(C*_r({self.symbolic}))"


def orbit_of(S: SaturatedSet | FractionalIdeal | IntegralIdeal) -> int:
    """Class-group index of the orbit; for ax+b the coset is absorbed by translations."""
    F = S.ideal if isinstance(S, SaturatedSet) else as_fractional(S)
    return class_of(F)


def stabilizer_of(kind: SemigroupKind, X: ConstructibleIdeal | SaturatedSet) -> StabilizerDescriptor:
    if isinstance(X, ConstructibleIdeal):
        if X.is_empty:
            raise DomainError("the empty set has no stabilizer in this sense")
        X = saturate(X, identity(kind))
    w = unit_group(kind.order).torsion_order
    if kind.variant is Family.PRINCIPAL:
        return StabilizerDescriptor(StabKind.TRIVIAL)
    if kind.variant is Family.MULT:
        return StabilizerDescriptor(StabKind.FINITE_CYCLIC, w=w)
    return StabilizerDescriptor(
        StabKind.IDEAL_SEMIDIRECT_UNITS, w=w, rank=kind.order.degree, ideal=X.ideal, shift=X.coset
    )


def stabilizes_directly(g, S: SaturatedSet) -> bool:
    """``g . S == S`` computed on normal forms."""
    return act(g, S) == S


# -- K-theory of stabilizers --------------------------------------------------------


def load_ktable(source: str | Path | Mapping | None) -> dict[str, tuple[int, int]]:
    """Validate a user table ``{descriptor: [k0_rank, k1_rank]}`` (mapping, JSON text or file)."""
    if source is None:
        return {}
    if isinstance(source, Mapping):
        raw = source
    else:
        path = Path(source)
        try:
            text = path.read_text() if path.exists() else str(source)
            raw = json.loads(text)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"malformed K-theory table: {exc}") from exc
    if not isinstance(raw, Mapping):
        raise ParseError("K-theory table must be a JSON object")
    table = {}
    for key, val in raw.items():
        ok = (
            isinstance(key, str)
            and isinstance(val, (list, tuple))
            and len(val) == 2
            and all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in val)
        )
        if not ok:
            raise ParseError(f"malformed K-theory table entry {key!r}: {val!r}")
        table[key] = (val[0], val[1])
    return table


def ktheory_of_group(desc: StabilizerDescriptor, table: Mapping | None = None) -> KTheoryRank:
    table = load_ktable(table)
    if desc.key in table:
        k0, k1 = table[desc.key]
        return KTheoryRank(k0, k1, note="user table")
    if desc.kind is StabKind.TRIVIAL:
        return KTheoryRank(1, 0, note="K_*(C) = (Z, 0)")
    if desc.kind is StabKind.FINITE_CYCLIC:
        return KTheoryRank(desc.w, 0, note=f"group algebra of Z/{desc.w} splits into {desc.w} copies of C")
    if desc.kind is StabKind.FREE_ABELIAN_TIMES_CYCLIC:
        if desc.rank < 1:
            return KTheoryRank(desc.w, 0, note="finite cyclic factor only")
        r = desc.w * 2 ** (desc.rank - 1)
        return KTheoryRank(r, r, note=f"Kunneth over Z^{desc.rank} with {desc.w} characters of Z/{desc.w}")
    return KTheoryRank(symbolic=desc.key, note="not evaluated; supply a table entry")


def kunneth(a: KTheoryRank, b: KTheoryRank) -> KTheoryRank:
    """Ranks of a tensor product with torsion-free K-groups."""
    if not (a.known and b.known):
        raise DomainError("Kunneth needs known ranks")
    return KTheoryRank(a.rank0 * b.rank0 + a.rank1 * b.rank1, a.rank0 * b.rank1 + a.rank1 * b.rank0)


# -- decomposition ---------------------------------------------------------------------


@dataclass
class DecompositionRow:
    class_index: int
    class_form: str
    representative: IntegralIdeal
    stabilizer: StabilizerDescriptor
    rank: KTheoryRank

    def to_json(self) -> dict:
        return {
            "class": self.class_form,
            "representative": str(self.representative),
            "stabilizer": str(self.stabilizer),
            "k0_rank": self.rank.rank0,
            "k1_rank": self.rank.rank1,
            "symbolic": None if self.rank.known else str(self.rank),
        }


@dataclass
class Decomposition:
    kind: SemigroupKind
    rows: list[DecompositionRow] = field(default_factory=list)

    @property
    def class_number(self) -> int:
        return len(self.rows)

    @property
    def total_k0(self) -> int:
        return sum(r.rank.rank0 for r in self.rows if r.rank.known)

    @property
    def total_k1(self) -> int:
        return sum(r.rank.rank1 for r in self.rows if r.rank.known)

    @property
    def symbolic(self) -> list[str]:
        return [str(r.rank) for r in self.rows if not r.rank.known]

    def to_json(self) -> dict:
        return {
            "semigroup": self.kind.variant.value,
            "d": self.kind.order.d,
            "class_number": self.class_number,
            "rows": [r.to_json() for r in self.rows],
            "total": {
                "k0_rank": self.total_k0,
                "k1_rank": self.total_k1,
                "symbolic": self.symbolic,
                "complete": not self.symbolic,
            },
            "assumptions": list(ASSUMPTIONS),
            "justification": AMENABILITY_NOTE[self.kind.variant],
        }


def decompose(kind: SemigroupKind, table: Mapping | None = None) -> Decomposition:
    cg = class_group(kind.order)
    out = Decomposition(kind)
    for i, (form, rep) in enumerate(zip(cg.elements, cg.representatives)):
        X = ConstructibleIdeal(kind, rep) if kind.variant is not Family.AXB else ConstructibleIdeal(kind, rep, kind.order.zero)
        desc = stabilizer_of(kind, X)
        out.rows.append(DecompositionRow(i, str(form), rep, desc, ktheory_of_group(desc, table)))
    return out


def orbit_representatives(kind: SemigroupKind) -> list[ConstructibleIdeal]:
    cg = class_group(kind.order)
    if kind.variant is Family.AXB:
        return [ConstructibleIdeal(kind, I, kind.order.zero) for I in cg.representatives]
    return [ConstructibleIdeal(kind, I) for I in cg.representatives]

