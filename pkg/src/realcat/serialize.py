"""JSON wire formats.

Rationals are always serialized as "p/q" strings, never as decimals, so
round-tripping is exact.  Tuple-shaped points (from products and hom
objects) are flattened to parenthesized labels on output; emitted files
re-parse to equal values.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError
from .intervals import IntervalSet
from .qcat import QCat, QFunctor
from .subconstructs import CCCWitness, SuitableSet, SuitableVariant
from .tnorm import BUILTIN_NORMS, Block, BlockKind, TNorm
from .values import format_rat, parse_rat
from .yoneda import FCSequence


def point_label(p) -> str:
    if isinstance(p, tuple):
        return "(" + ",".join(point_label(q) for q in p) + ")"
    return str(p)


# ---------------------------------------------------------------------------
# t-norms


def tnorm_to_obj(t: TNorm) -> Any:
    if t.name in BUILTIN_NORMS:
        return t.name
    return {
        "blocks": [
            {
                "lo": format_rat(b.lo),
                "hi": format_rat(b.hi),
                "kind": b.kind.value,
            }
            for b in t.blocks
        ]
    }


def tnorm_from_obj(obj: Any) -> TNorm:
    if isinstance(obj, str):
        maker = BUILTIN_NORMS.get(obj)
        if maker is None:
            raise ParseError(
                f"unknown t-norm name {obj!r}; "
                f"expected one of {sorted(BUILTIN_NORMS)}"
            )
        return maker()
    if not isinstance(obj, dict) or "blocks" not in obj:
        raise ParseError("t-norm must be a builtin name or {'blocks': [...]}")
    try:
        blocks = tuple(
            Block(
                parse_rat(b["lo"]),
                parse_rat(b["hi"]),
                BlockKind(b["kind"]),
            )
            for b in obj["blocks"]
        )
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad block spec: {exc}") from exc
    return TNorm(blocks)


# ---------------------------------------------------------------------------
# interval sets


def intervalset_to_obj(s: IntervalSet) -> Any:
    parts = []
    for lo, hi in s.components:
        if lo == hi:
            parts.append({"at": format_rat(lo)})
        else:
            parts.append({"lo": format_rat(lo), "hi": format_rat(hi)})
    return {"components": parts}


def intervalset_from_obj(obj: Any) -> IntervalSet:
    if not isinstance(obj, dict) or "components" not in obj:
        raise ParseError("interval set must be {'components': [...]}")
    parts = []
    for c in obj["components"]:
        if "at" in c:
            parts.append(parse_rat(c["at"]))
        else:
            try:
                parts.append((parse_rat(c["lo"]), parse_rat(c["hi"])))
            except KeyError as exc:
                raise ParseError(f"bad component {c!r}") from exc
    return IntervalSet.of(parts)


# ---------------------------------------------------------------------------
# categories and functors


def qcat_to_obj(c: QCat) -> Any:
    return {
        "tnorm": tnorm_to_obj(c.tnorm),
        "points": [point_label(p) for p in c.points],
        "matrix": [[format_rat(v) for v in row] for row in c.matrix],
    }


def qcat_from_obj(obj: Any) -> QCat:
    if not isinstance(obj, dict):
        raise ParseError("category must be an object")
    try:
        t = tnorm_from_obj(obj["tnorm"])
        points = tuple(obj["points"])
        matrix = tuple(
            tuple(parse_rat(v) for v in row) for row in obj["matrix"]
        )
    except KeyError as exc:
        raise ParseError(f"category is missing field {exc}") from exc
    try:
        return QCat(t, points, matrix)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def functor_to_obj(f: QFunctor) -> Any:
    return {
        "dom": qcat_to_obj(f.dom),
        "cod": qcat_to_obj(f.cod),
        "map": {
            point_label(p): point_label(img)
            for p, img in zip(f.dom.points, f.mapping)
        },
    }


def functor_from_obj(obj: Any) -> QFunctor:
    try:
        dom = qcat_from_obj(obj["dom"])
        cod = qcat_from_obj(obj["cod"])
        table = obj["map"]
        return QFunctor.from_dict(dom, cod, table)
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad functor: {exc}") from exc


# ---------------------------------------------------------------------------
# suitable sets


def suitable_to_obj(s: SuitableSet) -> Any:
    return {
        "variant": s.variant.value,
        "tnorm": tnorm_to_obj(s.tnorm),
        "k": intervalset_to_obj(s.k) if s.k is not None else None,
        "pairs": sorted(
            [format_rat(a), format_rat(b)] for a, b in s.pairs
        )
        if s.pairs is not None
        else None,
    }


def suitable_from_obj(obj: Any, tnorm: TNorm | None = None) -> SuitableSet:
    if not isinstance(obj, dict) or "variant" not in obj:
        raise ParseError("suitable set must carry a 'variant'")
    try:
        variant = SuitableVariant(obj["variant"])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if tnorm is None:
        if "tnorm" not in obj:
            raise ParseError("suitable set needs a t-norm (field or context)")
        tnorm = tnorm_from_obj(obj["tnorm"])
    k = intervalset_from_obj(obj["k"]) if obj.get("k") is not None else None
    pairs = (
        frozenset((parse_rat(a), parse_rat(b)) for a, b in obj["pairs"])
        if obj.get("pairs") is not None
        else None
    )
    try:
        return SuitableSet(tnorm, variant, k=k, pairs=pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# ---------------------------------------------------------------------------
# sequences and witnesses


def fcsequence_to_obj(s: FCSequence) -> Any:
    return {
        "category": qcat_to_obj(s.ambient),
        "prefix": [point_label(p) for p in s.prefix],
        "cycle": [point_label(p) for p in s.cycle],
    }


def fcsequence_from_obj(obj: Any) -> FCSequence:
    try:
        ambient = qcat_from_obj(obj["category"])
        return FCSequence(ambient, tuple(obj["prefix"]), tuple(obj["cycle"]))
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad sequence: {exc}") from exc


def witness_to_obj(w: CCCWitness) -> Any:
    return {
        "u": format_rat(w.u),
        "v": format_rat(w.v),
        "r": format_rat(w.r),
        "lhs": format_rat(w.lhs),
        "rhs": format_rat(w.rhs),
        "categories": {
            "A": qcat_to_obj(w.cat_a),
            "B": qcat_to_obj(w.cat_b),
            "C": qcat_to_obj(w.cat_c),
            "D": qcat_to_obj(w.cat_d),
        },
    }


def dumps(obj: Any) -> str:
    """Stable rendering: sorted keys, fixed indentation, newline at end."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
