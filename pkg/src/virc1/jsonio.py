"""JSON encodings of the library's values.

Rationals are always written as ``"p/q"`` strings (``"3"`` for integers),
never as floats.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .characters import BranchingResult, Character, QSeries
from .errors import StructuralError
from .sector_arith import INFINITE, Dim, Verdict


def rational_to_json(x) -> str:
    return str(Fraction(x))


def rational_from_json(s: str) -> Fraction:
    if not isinstance(s, str):
        raise StructuralError(f"rationals are encoded as strings, got {s!r}")
    return Fraction(s)


def character_to_json(ch: Character) -> dict:
    return {"offset": rational_to_json(ch.offset), "coeffs": list(ch.series.coefficients), "order": ch.order}


def character_from_json(d: dict) -> Character:
    return Character(rational_from_json(d["offset"]), QSeries(tuple(int(a) for a in d["coeffs"]), int(d["order"])))


def dim_to_json(d: Dim) -> dict:
    return {"infinite": True} if d.is_infinite else {"finite": rational_to_json(d.value)}


def dim_from_json(d: dict) -> Dim:
    if d.get("infinite") is True:
        return INFINITE
    if "finite" in d:
        return Dim(rational_from_json(d["finite"]))
    raise StructuralError(f"not a Dim encoding: {d!r}")


def verdict_to_json(v: Verdict) -> dict:
    return {
        "h": rational_to_json(v.h),
        "dimension": dim_to_json(v.dimension),
        "conjectural": v.conjectural,
        "justification": list(v.justification),
    }


def verdict_from_json(d: dict) -> Verdict:
    return Verdict(
        rational_from_json(d["h"]),
        dim_from_json(d["dimension"]),
        bool(d["conjectural"]),
        tuple(d["justification"]),
    )


def branching_to_json(b: BranchingResult) -> dict:
    return {
        "components": [{"h": rational_to_json(h), "multiplicity": m} for h, m in b.components],
        "residual": character_to_json(b.residual),
        "order": b.order,
    }


def branching_from_json(d: dict) -> BranchingResult:
    return BranchingResult(
        tuple((rational_from_json(c["h"]), int(c["multiplicity"])) for c in d["components"]),
        character_from_json(d["residual"]),
        int(d["order"]),
    )


def dumps(payload) -> str:
    """Canonical serialization: sorted keys, no whitespace variation."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
