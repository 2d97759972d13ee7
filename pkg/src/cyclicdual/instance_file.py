"""Reading and writing instance files.

The on-disk form is JSON with a top-level ``"version": 1``.  Unknown keys
are rejected and every index is range-checked, so a file that parses is
structurally sound; whether it satisfies the axioms is left to the
validators.  :func:`dumps` is deterministic, so ``dumps(loads(text))``
reproduces ``text`` byte for byte.
"""
from __future__ import annotations

import json
from typing import Any

from .crossed_module import CrossedModule
from .equivariant_preorder import ACosieve, APreorder
from .finite_group import FiniteGroup, GroupAction, GroupAxiomError, Subgroup
from .orbit_cat import OrbitInstance

VERSION = 1
TOP_KEYS = ("version", "metadata", "crossed_module", "preorder", "presheaf", "duality", "cosieve")
METADATA_KEYS = ("name", "provenance", "construction")


class InstanceFormatError(ValueError):
    pass


# -- emit ---------------------------------------------------------------------


def _scalar(v: Any) -> str:
    return json.dumps(v, ensure_ascii=False)


def _render(value: Any, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{_scalar(k)}: {_render(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if all(not isinstance(v, (list, dict)) for v in value):
            return "[" + ", ".join(_scalar(v) for v in value) + "]"
        items = [inner + _render(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return _scalar(value)


def group_to_dict(G: FiniteGroup) -> dict:
    return {"order": G.order, "table": [list(r) for r in G.table], "labels": list(G.labels)}


def to_dict(inst: OrbitInstance) -> dict:
    cm, P = inst.cm, inst.preorder
    out: dict[str, Any] = {"version": VERSION}
    meta = {k: inst.metadata[k] for k in METADATA_KEYS if k in inst.metadata}
    if meta:
        out["metadata"] = meta
    out["crossed_module"] = {
        "G": group_to_dict(cm.G),
        "A": group_to_dict(cm.A),
        "t": list(cm.t),
        "act": [list(r) for r in cm.act],
    }
    out["preorder"] = {
        "elements": list(P.elements),
        "leq": [list(r) for r in P.leq],
        "action": [list(r) for r in P.action.perm],
    }
    out["presheaf"] = [list(H.members) for H in inst.presheaf]
    if inst.duality is not None:
        out["duality"] = list(inst.duality)
    if inst.cosieve is not None:
        out["cosieve"] = [list(r) for r in inst.cosieve.rel]
    return out


def dumps(inst: OrbitInstance) -> str:
    return _render(to_dict(inst), 0) + "\n"


# -- parse --------------------------------------------------------------------


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise InstanceFormatError(msg)


def _keys(d: Any, allowed, required, where: str) -> None:
    _expect(isinstance(d, dict), f"{where}: expected an object")
    unknown = sorted(set(d) - set(allowed))
    _expect(not unknown, f"{where}: unknown keys {unknown}")
    missing = [k for k in required if k not in d]
    _expect(not missing, f"{where}: missing keys {missing}")


def _int_list(v: Any, where: str, bound: int | None = None) -> list[int]:
    _expect(isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v),
            f"{where}: expected a list of integers")
    if bound is not None:
        _expect(all(0 <= x < bound for x in v), f"{where}: index out of range 0..{bound - 1}")
    return v


def _matrix(v: Any, rows: int, cols: int, where: str, kind=int, bound: int | None = None) -> list:
    _expect(isinstance(v, list) and len(v) == rows, f"{where}: expected {rows} rows")
    for i, row in enumerate(v):
        _expect(isinstance(row, list) and len(row) == cols, f"{where}[{i}]: expected {cols} entries")
        if kind is bool:
            _expect(all(isinstance(x, bool) for x in row), f"{where}[{i}]: expected booleans")
        else:
            _int_list(row, f"{where}[{i}]", bound)
    return v


def group_from_dict(d: Any, where: str) -> FiniteGroup:
    _keys(d, ("order", "table", "labels"), ("order", "table"), where)
    k = d["order"]
    _expect(isinstance(k, int) and k >= 1, f"{where}.order: expected a positive integer")
    table = _matrix(d["table"], k, k, f"{where}.table", bound=k)
    labels = d.get("labels", [str(i) for i in range(k)])
    _expect(isinstance(labels, list) and len(labels) == k and all(isinstance(x, str) for x in labels),
            f"{where}.labels: expected {k} strings")
    try:
        return FiniteGroup(tuple(map(tuple, table)), tuple(labels))
    except GroupAxiomError as exc:
        raise InstanceFormatError(f"{where}: {exc}") from exc


def from_dict(d: Any) -> OrbitInstance:
    _keys(d, TOP_KEYS, ("version", "crossed_module", "preorder", "presheaf"), "instance")
    _expect(d["version"] == VERSION, f"unsupported version {d['version']!r}")
    meta = d.get("metadata", {})
    _keys(meta, METADATA_KEYS, (), "metadata")
    _expect(all(isinstance(v, str) for v in meta.values()), "metadata: values must be strings")

    c = d["crossed_module"]
    _keys(c, ("G", "A", "t", "act"), ("G", "A", "t", "act"), "crossed_module")
    G = group_from_dict(c["G"], "crossed_module.G")
    A = group_from_dict(c["A"], "crossed_module.A")
    if A == G:
        A = G
    t = _int_list(c["t"], "crossed_module.t", A.order)
    _expect(len(t) == G.order, f"crossed_module.t: expected {G.order} entries")
    act = _matrix(c["act"], A.order, G.order, "crossed_module.act", bound=G.order)
    cm = CrossedModule(G, A, tuple(t), tuple(map(tuple, act)))

    p = d["preorder"]
    _keys(p, ("elements", "leq", "action"), ("elements", "leq", "action"), "preorder")
    elements = p["elements"]
    _expect(isinstance(elements, list) and all(isinstance(x, str) for x in elements),
            "preorder.elements: expected a list of strings")
    _expect(len(set(elements)) == len(elements), "preorder.elements: labels must be distinct")
    k = len(elements)
    leq = _matrix(p["leq"], k, k, "preorder.leq", kind=bool)
    perm = _matrix(p["action"], A.order, k, "preorder.action", bound=k)
    P = APreorder(tuple(elements), leq, GroupAction(A, k, tuple(map(tuple, perm))))

    sheaf = d["presheaf"]
    _expect(isinstance(sheaf, list) and len(sheaf) == k, f"presheaf: expected {k} subgroups")
    subs = []
    for i, members in enumerate(sheaf):
        _int_list(members, f"presheaf[{i}]", G.order)
        try:
            subs.append(Subgroup(G, tuple(members)))
        except GroupAxiomError as exc:
            raise InstanceFormatError(f"presheaf[{i}]: {exc}") from exc

    duality = None
    if "duality" in d:
        duality = tuple(_int_list(d["duality"], "duality", k))
        _expect(len(duality) == k, f"duality: expected {k} entries")
    cosieve = None
    if "cosieve" in d:
        cosieve = ACosieve(_matrix(d["cosieve"], k, k, "cosieve", kind=bool))
    return OrbitInstance(cm, P, tuple(subs), duality, cosieve, metadata=dict(meta))


def loads(text: str) -> OrbitInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    return from_dict(data)


def load(path) -> OrbitInstance:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(inst: OrbitInstance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(inst))
