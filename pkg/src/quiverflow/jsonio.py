"""JSON records for quivers, relation sets, dimension vectors and representations."""
from __future__ import annotations

import json
from pathlib import Path as FsPath

import numpy as np

from .errors import InvalidQuiver, ShapeError
from .quiver import DimensionVector, Edge, Quiver, Relation, RelationSet
from .rep import GradedLinearMap, Representation


def quiver_to_dict(Q: Quiver, R: RelationSet | None = None) -> dict:
    out = {"vertices": list(Q.vertices),
           "edges": [{"id": e.id, "tail": e.tail, "head": e.head} for e in Q.edges],
           "relations": []}
    if Q.framing is not None:
        out["framing"] = Q.framing
    for r in R or ():
        out["relations"].append({
            "id": r.id, "tail": r.tail, "head": r.head,
            "terms": [{"coeff": [c.real, c.imag], "path": list(p.edges)} for c, p in r.terms]})
    return out


def quiver_from_dict(d: dict) -> tuple[Quiver, RelationSet]:
    try:
        Q = Quiver(tuple(d["vertices"]),
                   tuple(Edge(str(e["id"]), str(e["tail"]), str(e["head"])) for e in d.get("edges", [])),
                   d.get("framing"))
        rels = []
        for r in d.get("relations", []):
            terms = [(complex(*t["coeff"]) if isinstance(t["coeff"], list) else complex(t["coeff"]),
                      tuple(t["path"])) for t in r["terms"]]
            rels.append(Relation(str(r["id"]), str(r["tail"]), str(r["head"]), tuple(terms)))
    except (KeyError, TypeError) as exc:
        raise InvalidQuiver(f"malformed quiver record: {exc}") from exc
    return Q, RelationSet(tuple(rels)).validate(Q)


def dims_to_dict(v: DimensionVector) -> dict:
    return v.as_dict()


def dims_from_any(Q: Quiver, v) -> DimensionVector:
    """Accepts a dict, a sequence or a comma separated string in vertex order."""
    if isinstance(v, str):
        v = v.strip()
        if v.startswith("{"):
            v = json.loads(v)
        else:
            v = [int(s) for s in v.split(",")]
    return Q.dimvec(v)


def _matrix_to_list(M: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in M]


def _matrix_from_list(rows, shape) -> np.ndarray:
    if shape[0] == 0 or shape[1] == 0 or rows is None:
        return np.zeros(shape, dtype=complex)
    a = np.asarray(rows, dtype=float)
    if a.ndim != 3 or a.shape[2] != 2:
        raise ShapeError("matrix entries must be [re, im] pairs")
    return a[..., 0] + 1j * a[..., 1]


def rep_to_dict(x: GradedLinearMap) -> dict:
    out = {"blocks": {k: _matrix_to_list(b) for k, b in x.blocks.items()}}
    if isinstance(x, Representation):
        out["dims"] = x.dims.as_dict()
    else:
        out["src"], out["tgt"] = x.src.as_dict(), x.tgt.as_dict()
    return out


def rep_from_dict(Q: Quiver, d: dict) -> Representation:
    v = Q.dimvec(d["dims"])
    blocks = {}
    for e in Q.edges:
        shape = (v[e.head], v[e.tail])
        blocks[e.id] = _matrix_from_list(d.get("blocks", {}).get(e.id), shape)
    return Representation(Q, v, blocks)


def map_from_dict(Q: Quiver, d: dict, src, tgt) -> GradedLinearMap:
    """Element of Hom^1(Q, src, tgt); missing edges are zero."""
    src, tgt = Q.dimvec(src), Q.dimvec(tgt)
    blocks = {e.id: _matrix_from_list(d.get("blocks", {}).get(e.id), (tgt[e.head], src[e.tail]))
              for e in Q.edges}
    return GradedLinearMap(Q, src, tgt, blocks)


def load_json(path) -> dict:
    return json.loads(FsPath(path).read_text())


def _finite(o):
    """Non-finite floats become null so the output stays strict JSON."""
    if isinstance(o, float):
        return o if np.isfinite(o) else None
    if isinstance(o, dict):
        return {k: _finite(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [_finite(v) for v in o]
    return o


def dump_json(obj) -> str:
    obj = json.loads(json.dumps(obj, default=_default))
    return json.dumps(_finite(obj), sort_keys=True, indent=2, allow_nan=False)


def _default(o):
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, (np.floating,)):
        return float(o)
    if isinstance(o, (complex, np.complexfloating)):
        return [float(o.real), float(o.imag)]
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, DimensionVector):
        return o.as_dict()
    if hasattr(o, "as_dict"):
        return o.as_dict()
    raise TypeError(f"cannot serialise {type(o).__name__}")


__all__ = ["quiver_to_dict", "quiver_from_dict", "dims_from_any", "dims_to_dict",
           "rep_to_dict", "rep_from_dict", "map_from_dict", "load_json", "dump_json"]
