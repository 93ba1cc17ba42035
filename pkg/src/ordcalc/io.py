"""JSON documents for sequences, step sets, trees and multisets.

Ordinal fields are expression strings in the surface syntax (plain JSON
integers are accepted too).  Multiplicities are positive integers,
``"omega"`` (or ``"aleph0"``) for a countable infinity, or ``"alephK"``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Dict, Union

from .core import Ordinal, ordinal
from .invariant import Aleph, OrdMultiset
from .sequence import Explicit, Position, Repeat, SeqDesc, StepSet
from .syntax import parse_ordinal, print_ordinal
from .trees import TreeDesc

__all__ = [
    "FormatError",
    "load_json",
    "ordinal_field",
    "sequence_from_doc",
    "sequence_to_doc",
    "steps_from_doc",
    "steps_to_doc",
    "tree_from_doc",
    "tree_to_doc",
    "multiset_from_doc",
    "multiset_to_doc",
    "multiplicity_from_doc",
]


class FormatError(ValueError):
    pass


def load_json(path: Union[str, Path]) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON: {e}") from e


def ordinal_field(v) -> Ordinal:
    if isinstance(v, bool):
        raise FormatError(f"expected an ordinal, got {v!r}")
    if isinstance(v, int):
        if v < 0:
            raise FormatError("ordinals are non-negative")
        return ordinal(v)
    if isinstance(v, str):
        return parse_ordinal(v)
    raise FormatError(f"expected an ordinal expression, got {v!r}")


def _require(doc, key: str, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"missing field {key!r}")
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise FormatError(f"field {key!r} has the wrong type")
    return val


def sequence_from_doc(doc: Dict) -> SeqDesc:
    segs = []
    for seg in _require(doc, "segments", list):
        kind = _require(seg, "kind", str)
        if kind == "explicit":
            segs.append(Explicit(ordinal_field(v) for v in _require(seg, "values", list)))
        elif kind == "repeat":
            length = ordinal_field(_require(seg, "length"))
            if not length:
                raise FormatError("repeat length must be at least 1")
            segs.append(Repeat(ordinal_field(_require(seg, "value")), length))
        else:
            raise FormatError(f"unknown segment kind {kind!r}")
    return SeqDesc(segs)


def sequence_to_doc(s: SeqDesc) -> Dict:
    out = []
    for seg in s.segments:
        if isinstance(seg, Explicit):
            out.append({"kind": "explicit", "values": [print_ordinal(v) for v in seg.values]})
        else:
            out.append({"kind": "repeat", "value": print_ordinal(seg.value), "length": print_ordinal(seg.length)})
    return {"segments": out}


def steps_from_doc(doc: Dict) -> StepSet:
    mode = _require(doc, "mode", str)
    if mode not in ("all-natural", "all-ordinary", "selected"):
        raise FormatError(f"unknown step mode {mode!r}")
    if mode != "selected":
        return StepSet(mode)
    pos = []
    for p in _require(doc, "natural_steps", list):
        seg = _require(p, "segment", int)
        pos.append(Position(seg, ordinal_field(_require(p, "offset"))))
    return StepSet.selected(pos)


def steps_to_doc(g: StepSet) -> Dict:
    if g.mode != "selected":
        return {"mode": g.mode}
    steps = sorted(g.natural_steps, key=lambda p: (p.segment, p.offset))
    return {
        "mode": "selected",
        "natural_steps": [{"segment": p.segment, "offset": print_ordinal(p.offset)} for p in steps],
    }


_ALEPH = re.compile(r"aleph(\d+)")


def multiplicity_from_doc(v):
    if isinstance(v, bool):
        raise FormatError(f"bad multiplicity {v!r}")
    if isinstance(v, int):
        if v < 1:
            raise FormatError("multiplicity must be positive")
        return v
    if v == "omega":
        return Aleph(0)
    m = _ALEPH.fullmatch(v) if isinstance(v, str) else None
    if m:
        return Aleph(int(m.group(1)))
    raise FormatError(f"bad multiplicity {v!r}")


def _mult_to_doc(m):
    return m if isinstance(m, int) else str(m)


def tree_from_doc(doc: Dict) -> TreeDesc:
    kids = []
    for c in _require(doc, "children", list):
        m = multiplicity_from_doc(_require(c, "multiplicity"))
        if isinstance(m, Aleph) and m.index:
            raise FormatError("tree multiplicities must be finite or 'omega'")
        kids.append((tree_from_doc(_require(c, "tree")), m))
    return TreeDesc(tuple(kids))


def tree_to_doc(t: TreeDesc) -> Dict:
    return {"children": [{"multiplicity": _mult_to_doc(m), "tree": tree_to_doc(c)} for c, m in t.children]}


def multiset_from_doc(doc: Dict) -> OrdMultiset:
    entries = []
    seen = set()
    for e in _require(doc, "entries", list):
        v = ordinal_field(_require(e, "value"))
        if v in seen:
            raise FormatError(f"duplicate multiset value {print_ordinal(v)}")
        seen.add(v)
        entries.append((v, multiplicity_from_doc(_require(e, "multiplicity"))))
    return OrdMultiset(entries)


def multiset_to_doc(m: OrdMultiset) -> Dict:
    return {"entries": [{"value": print_ordinal(v), "multiplicity": _mult_to_doc(n)} for v, n in m]}
