"""Expansion and restriction of quivers with relations.

An expansion splits each base vertex k into parts k_1, ..., k_m (each with a
positive dimension). Every base edge a: t -> h lifts to one edge per pair
(part of t, part of h); a restriction keeps a subset of these lifts. Relations
lift the same way, per (part of t(r), part of h(r)), and a lifted relation keeps
only the paths made of retained edges.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidExpansion
from .quiver import Edge, Quiver, Relation, RelationSet
from .rep import Representation


@dataclass(frozen=True)
class ExpansionSpec:
    base: Quiver
    relations: RelationSet
    parts: tuple[tuple[str, str, int], ...]  # (new vertex, base vertex, dim)
    retained: tuple[tuple[str, str, str, str], ...]  # (new edge, base edge, tail part, head part)
    framing: str | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        names = [p for p, _, _ in self.parts]
        if len(set(names)) != len(names):
            raise InvalidExpansion("duplicate part names")
        for p, k, d in self.parts:
            if k not in self.base.vertices:
                raise InvalidExpansion(f"part {p} maps to unknown vertex {k}")
            if int(d) != d or d <= 0:
                raise InvalidExpansion(f"part {p} must have positive dimension, got {d}")
        covered = {k for _, k, _ in self.parts}
        if covered != set(self.base.vertices):
            raise InvalidExpansion(f"vertex map misses {sorted(set(self.base.vertices) - covered)}")
        vmap = self.vertex_map
        seen_names, seen_lifts = set(), set()
        for name, a, i, j in self.retained:
            e = self.base.edge(a)
            if i not in vmap or j not in vmap or vmap[i] != e.tail or vmap[j] != e.head:
                raise InvalidExpansion(f"{name} is not a lift of {a}")
            if name in seen_names or (a, i, j) in seen_lifts:
                raise InvalidExpansion(f"edge {name} ({a}: {i}->{j}) listed twice")
            seen_names.add(name)
            seen_lifts.add((a, i, j))
        if self.framing is not None and self.framing not in vmap:
            raise InvalidExpansion("framing must be one of the parts")

    @property
    def vertex_map(self) -> dict[str, str]:
        return {p: k for p, k, _ in self.parts}

    @property
    def part_dims(self) -> dict[str, int]:
        return {p: d for p, _, d in self.parts}

    def parts_of(self, k: str) -> list[str]:
        return [p for p, b, _ in self.parts if b == k]

    def base_dims(self) -> dict[str, int]:
        out = {k: 0 for k in self.base.vertices}
        for _, k, d in self.parts:
            out[k] += d
        return out

    def lift_names(self) -> dict[tuple[str, str, str], str]:
        return {(a, i, j): name for name, a, i, j in self.retained}

    def edge_projection(self) -> dict[str, str]:
        return {name: a for name, a, _, _ in self.retained}

    def offsets(self) -> dict[str, int]:
        out, acc = {}, {}
        for p, k, d in self.parts:
            out[p] = acc.get(k, 0)
            acc[k] = acc.get(k, 0) + d
        return out


@dataclass(frozen=True)
class Restriction:
    Qprime: Quiver
    Rprime: RelationSet
    fully_restricted: bool
    fully_restricted_all_lifts: bool
    dropped_paths: tuple[dict, ...]
    relation_origin: dict = field(default_factory=dict, compare=False)


def _lift_paths(spec: ExpansionSpec, edges: tuple[str, ...], i: str, j: str):
    """All lifts of a base path starting at part i and ending at part j."""
    Q = spec.base
    inner = [spec.parts_of(Q.edge(a).head) for a in edges[:-1]]
    for mids in itertools.product(*inner):
        seq = (i,) + tuple(mids) + (j,)
        yield tuple((a, seq[m], seq[m + 1]) for m, a in enumerate(edges))


def expand_restrict(spec: ExpansionSpec) -> Restriction:
    names = spec.lift_names()
    Qp = Quiver(tuple(p for p, _, _ in spec.parts),
                tuple(Edge(name, i, j) for name, _, i, j in spec.retained),
                spec.framing)
    kept_rel, dropped, origin = [], [], {}
    for r in spec.relations:
        for i in spec.parts_of(r.tail):
            for j in spec.parts_of(r.head):
                rid = f"{r.id}[{i}>{j}]"
                terms, lost = [], []
                for c, p in r.terms:
                    for lift in _lift_paths(spec, p.edges, i, j):
                        removed = sum(1 for l in lift if l not in names)
                        if removed == 0:
                            terms.append((c, tuple(names[l] for l in lift)))
                        else:
                            lost.append({"relation": rid, "base_relation": r.id,
                                         "path": ["%s:%s>%s" % l for l in lift],
                                         "coeff": [c.real, c.imag], "removed": removed})
                for w in lost:
                    w["relation_retained"] = bool(terms)
                dropped.extend(lost)
                if terms:
                    kept_rel.append(Relation(rid, i, j, tuple(terms)))
                    origin[rid] = r.id
    Rp = RelationSet(tuple(kept_rel)).validate(Qp)
    full = all(w["removed"] >= 2 for w in dropped if w["relation_retained"])
    full_all = all(w["removed"] >= 2 for w in dropped)
    return Restriction(Qp, Rp, full, full_all, tuple(dropped), origin)


def trivial_spec(Q: Quiver, R: RelationSet, dims) -> ExpansionSpec:
    v = Q.dimvec(dims)
    parts = tuple((k, k, v[k]) for k in Q.vertices)
    retained = tuple((e.id, e.id, e.tail, e.head) for e in Q.edges)
    return ExpansionSpec(Q, R, parts, retained, Q.framing)


def adhm_to_handsaw_spec(base: Quiver, R: RelationSet, v_dims, w_dims) -> ExpansionSpec:
    """Split V = V1 + ... + V_{n-1}, W = W1 + ... + Wn and keep the handsaw edges.

    ``base`` must carry edges B1, B2 (loops at V), a: W->V and b: V->W.
    """
    n = len(w_dims)
    if len(v_dims) != n - 1:
        raise InvalidExpansion("need n-1 V dimensions and n W dimensions")
    parts = tuple((f"V{k}", "V", int(d)) for k, d in enumerate(v_dims, 1))
    parts += tuple((f"W{k}", "W", int(d)) for k, d in enumerate(w_dims, 1))
    keep = [(f"B1_{k}", "B1", f"V{k}", f"V{k + 1}") for k in range(1, n - 1)]
    keep += [(f"B2_{k}", "B2", f"V{k}", f"V{k}") for k in range(1, n)]
    keep += [(f"a_{k}", "a", f"W{k}", f"V{k}") for k in range(1, n)]
    keep += [(f"b_{k}", "b", f"V{k - 1}", f"W{k}") for k in range(2, n + 1)]
    return ExpansionSpec(base, R, parts, tuple(keep), None)


def build_negative_slice_quiver(Q: Quiver, R: RelationSet, v1, v2) -> ExpansionSpec:
    """Two copies: every edge inside copy 1 and every edge from copy 2 to copy 1.

    Parts of dimension zero are omitted. ``meta['relation_split']`` records the
    blocks of Rel(v1, v1) and Rel(v2, v1) that the relation map splits into.
    """
    v1, v2 = Q.dimvec(v1), Q.dimvec(v2)
    parts = []
    for k in Q.vertices:
        if v1[k] == 0 and v2[k] == 0:
            raise InvalidExpansion(f"vertex {k} has dimension zero in both copies")
        if v1[k]:
            parts.append((f"{k}#1", k, v1[k]))
        if v2[k]:
            parts.append((f"{k}#2", k, v2[k]))
    have = {p for p, _, _ in parts}
    keep = []
    for e in Q.edges:
        if f"{e.tail}#1" in have and f"{e.head}#1" in have:
            keep.append((f"{e.id}#11", e.id, f"{e.tail}#1", f"{e.head}#1"))
    for e in Q.edges:
        if f"{e.tail}#2" in have and f"{e.head}#1" in have:
            keep.append((f"{e.id}#21", e.id, f"{e.tail}#2", f"{e.head}#1"))
    framing = None
    if Q.framing is not None and f"{Q.framing}#1" in have:
        framing = f"{Q.framing}#1"
    split = {
        "Rel(v1,v1)": [{"relation": r.id, "shape": [v1[r.head], v1[r.tail]]} for r in R],
        "Rel(v2,v1)": [{"relation": r.id, "shape": [v1[r.head], v2[r.tail]]} for r in R],
    }
    return ExpansionSpec(Q, R, tuple(parts), tuple(keep), framing,
                         {"v1": v1.as_dict(), "v2": v2.as_dict(), "relation_split": split})


def embed_restricted_rep(spec: ExpansionSpec, xprime: Representation) -> Representation:
    """Block-assemble a representation of the restricted quiver over the base."""
    pd = spec.part_dims
    if any(xprime.dims[p] != d for p, d in pd.items()):
        raise InvalidExpansion(f"dims {xprime.dims} do not match the split {pd}")
    Q = spec.base
    v = spec.base_dims()
    off = spec.offsets()
    blocks = {e.id: np.zeros((v[e.head], v[e.tail]), dtype=complex) for e in Q.edges}
    for name, a, i, j in spec.retained:
        b = xprime.blocks[name]
        blocks[a][off[j]:off[j] + pd[j], off[i]:off[i] + pd[i]] = b
    return Representation(Q, v, blocks)


def restrict_rep(spec: ExpansionSpec, Qprime: Quiver, x: Representation) -> Representation:
    """Read the retained blocks of a base representation."""
    pd = spec.part_dims
    off = spec.offsets()
    blocks = {}
    for name, a, i, j in spec.retained:
        blocks[name] = x.blocks[a][off[j]:off[j] + pd[j], off[i]:off[i] + pd[i]]
    return Representation(Qprime, pd, blocks)


def lifted_relation_blocks(spec: ExpansionSpec, value_blocks: dict) -> dict[str, np.ndarray]:
    """Cut base relation values into (part of tail, part of head) blocks."""
    pd, off = spec.part_dims, spec.offsets()
    out = {}
    for r in spec.relations:
        b = value_blocks[r.id]
        for i in spec.parts_of(r.tail):
            for j in spec.parts_of(r.head):
                out[f"{r.id}[{i}>{j}]"] = b[off[j]:off[j] + pd[j], off[i]:off[i] + pd[i]]
    return out
