"""JSON schemas (draft 2020-12) for the documents printed by ``--json``."""

from __future__ import annotations

_INT = {"type": "integer"}
_STR = {"type": "string"}
_BOOL = {"type": "boolean"}
_STRS = {"type": "array", "items": _STR}
_NINT = {"type": ["integer", "null"]}


def _obj(props: dict, required=None) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(required if required is not None else props),
    }


_CHECKS = {"type": "array", "items": _obj({"condition": _STR, "ok": _BOOL})}

SCHEMAS: dict[str, dict] = {
    "classgroup": _obj(
        {
            "d": _INT,
            "disc": _INT,
            "h": {"type": "integer", "minimum": 1},
            "h_by_generation": _INT,
            "forms": _STRS,
            "representatives": _STRS,
            "orders": {"type": "array", "items": _INT},
            "table": {"type": "array", "items": {"type": "array", "items": _INT}},
        }
    ),
    "units": _obj({"d": _INT, "kind": _STR, "torsion_order": _INT, "units": _STRS}),
    "primes": _obj(
        {
            "d": _INT,
            "bound": _INT,
            "primes": {
                "type": "array",
                "items": _obj({"ideal": _STR, "norm": _INT, "residue_degree": _INT, "ramified": _BOOL}),
            },
        }
    ),
    "ideal": _obj({"d": _INT, "op": _STR, "operands": _STRS, "result": _STR}, ["d", "op", "result"]),
    "closure": _obj(
        {
            "semigroup": _STR,
            "d": _INT,
            "norm_bound": _INT,
            "generators": _STRS,
            "count": _INT,
            "nonempty": _INT,
            "sets": _STRS,
        }
    ),
    "independence": _obj(
        {
            "semigroup": _STR,
            "d": _INT,
            "set": _STR,
            "pieces": _STRS,
            "covered": _BOOL,
            "index": _NINT,
            "witness": {"type": ["string", "null"]},
        }
    ),
    "group-law": _obj(
        {
            "semigroup": _STR,
            "d": _INT,
            "seed": _INT,
            "samples": _INT,
            "mismatches": _INT,
            "second_bound_mismatches": _INT,
            "passed": _BOOL,
            "example": {"type": ["object", "null"]},
        }
    ),
    "decompose": _obj(
        {
            "semigroup": _STR,
            "d": _INT,
            "class_number": _INT,
            "rows": {
                "type": "array",
                "items": _obj(
                    {
                        "class": _STR,
                        "representative": _STR,
                        "stabilizer": _STR,
                        "k0_rank": _NINT,
                        "k1_rank": _NINT,
                        "symbolic": {"type": ["string", "null"]},
                    }
                ),
            },
            "total": _obj({"k0_rank": _INT, "k1_rank": _INT, "symbolic": _STRS, "complete": _BOOL}),
            "assumptions": _STRS,
            "justification": _STR,
        }
    ),
    "witness": _obj(
        {
            "d": _INT,
            "ambient": _STR,
            "pieces": _STRS,
            "kind": {"enum": ["pi4", "pi5"]},
            "witness": {"type": "object", "additionalProperties": _STR},
            "checks": _CHECKS,
        }
    ),
    "verify-identities": _obj(
        {
            "semigroup": _STR,
            "d": _INT,
            "window_size": _INT,
            "cases": _INT,
            "failed": _INT,
            "passed": _BOOL,
            "results": {"type": "array", "items": {"type": "object"}},
        }
    ),
    "error": _obj({"error": _obj({"exit_code": _INT, "message": _STR})}),
}
