"""Quivers, dimension vectors, paths and relations.

Paths are stored in application order: ``Path(("a1", "a2"))`` means apply
``a1`` first, so the printed word is ``a2 a1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    InvalidDimensionVector,
    InvalidPath,
    InvalidQuiver,
    InvalidRelation,
)


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    framing: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidQuiver("duplicate vertex ids")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise InvalidQuiver("duplicate edge ids")
        vs = set(self.vertices)
        for e in self.edges:
            if e.tail not in vs or e.head not in vs:
                raise InvalidQuiver(f"edge {e.id} references an unknown vertex")
        if self.framing is not None and self.framing not in vs:
            raise InvalidQuiver(f"framing vertex {self.framing} is not a vertex")

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Iterable[tuple], framing=None) -> "Quiver":
        return cls(tuple(str(v) for v in vertices),
                   tuple(Edge(str(a), str(t), str(h)) for a, t, h in edges),
                   None if framing is None else str(framing))

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    def edge(self, eid: str) -> Edge:
        try:
            return self.edge_map[eid]
        except KeyError:
            raise InvalidPath(f"unknown edge {eid!r}") from None

    def out_edges(self, k: str) -> list[Edge]:
        return [e for e in self.edges if e.tail == k]

    def in_edges(self, k: str) -> list[Edge]:
        return [e for e in self.edges if e.head == k]

    def loops(self) -> list[Edge]:
        return [e for e in self.edges if e.is_loop]

    @property
    def nonframing(self) -> tuple[str, ...]:
        return tuple(k for k in self.vertices if k != self.framing)

    def dimvec(self, v) -> "DimensionVector":
        return DimensionVector.of(self, v)

    def basis_vector(self, k: str) -> "DimensionVector":
        return DimensionVector.of(self, {k: 1})

    def zero_vector(self) -> "DimensionVector":
        return DimensionVector.of(self, {})

    def path(self, edges: Sequence[str]) -> "Path":
        p = Path(tuple(edges))
        p.validate(self)
        return p

    def without_framing(self) -> "Quiver":
        return Quiver(self.vertices, self.edges, None)


@dataclass(frozen=True)
class DimensionVector(Mapping[str, int]):
    """Nonnegative integer per vertex, stored in the quiver's vertex order."""

    vertices: tuple[str, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.values):
            raise InvalidDimensionVector("vertex/value length mismatch")
        for x in self.values:
            if int(x) != x or x < 0:
                raise InvalidDimensionVector(f"entries must be nonnegative integers, got {x!r}")
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))

    @classmethod
    def of(cls, Q: Quiver, v) -> "DimensionVector":
        if isinstance(v, DimensionVector):
            if v.vertices != Q.vertices:
                raise InvalidDimensionVector("dimension vector belongs to another vertex set")
            return v
        if isinstance(v, Mapping):
            extra = set(map(str, v)) - set(Q.vertices)
            if extra:
                raise InvalidDimensionVector(f"unknown vertices {sorted(extra)}")
            d = {str(k): x for k, x in v.items()}
            return cls(Q.vertices, tuple(d.get(k, 0) for k in Q.vertices))
        v = tuple(v)
        if len(v) != len(Q.vertices):
            raise InvalidDimensionVector(
                f"expected {len(Q.vertices)} entries, got {len(v)}")
        return cls(Q.vertices, v)

    def __getitem__(self, k: str) -> int:
        try:
            return self.values[self.vertices.index(k)]
        except ValueError:
            raise KeyError(k) from None

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def _check(self, other: "DimensionVector"):
        if not isinstance(other, DimensionVector) or other.vertices != self.vertices:
            raise InvalidDimensionVector("mismatched vertex sets")

    def __add__(self, other: "DimensionVector") -> "DimensionVector":
        self._check(other)
        return DimensionVector(self.vertices, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "DimensionVector") -> "DimensionVector":
        self._check(other)
        return DimensionVector(self.vertices, tuple(a - b for a, b in zip(self.values, other.values)))

    def leq(self, other: "DimensionVector") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def is_zero(self) -> bool:
        return self.total == 0

    def as_tuple(self) -> tuple[int, ...]:
        return self.values

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.vertices, self.values))

    def __repr__(self):
        return "(" + ",".join(map(str, self.values)) + ")"


@dataclass(frozen=True)
class Path:
    edges: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.edges:
            raise InvalidPath("paths are nonempty")

    def validate(self, Q: Quiver):
        es = [Q.edge(a) for a in self.edges]
        for e1, e2 in zip(es, es[1:]):
            if e1.head != e2.tail:
                raise InvalidPath(f"{e1.id} then {e2.id} do not compose")

    def tail(self, Q: Quiver) -> str:
        return Q.edge(self.edges[0]).tail

    def head(self, Q: Quiver) -> str:
        return Q.edge(self.edges[-1]).head

    def __len__(self):
        return len(self.edges)

    def __str__(self):
        # print order
        return " ".join(reversed(self.edges))


@dataclass(frozen=True)
class Relation:
    id: str
    tail: str
    head: str
    terms: tuple[tuple[complex, Path], ...] = ()

    def __post_init__(self):
        terms = tuple((complex(c), p if isinstance(p, Path) else Path(tuple(p)))
                      for c, p in self.terms)
        object.__setattr__(self, "terms", terms)
        seen = set()
        for c, p in terms:
            if c == 0:
                raise InvalidRelation(f"relation {self.id} has a zero coefficient")
            if p.edges in seen:
                raise InvalidRelation(f"relation {self.id} repeats path {p.edges}")
            seen.add(p.edges)

    def validate(self, Q: Quiver):
        if self.tail not in Q.vertices or self.head not in Q.vertices:
            raise InvalidRelation(f"relation {self.id} references an unknown vertex")
        for _, p in self.terms:
            p.validate(Q)
            if p.tail(Q) != self.tail or p.head(Q) != self.head:
                raise InvalidRelation(f"path {p.edges} does not run {self.tail} -> {self.head}")

    def coefficient(self, edges: Sequence[str]) -> complex:
        edges = tuple(edges)
        for c, p in self.terms:
            if p.edges == edges:
                return c
        return 0j

    @property
    def lengths(self) -> set[int]:
        return {len(p) for _, p in self.terms}

    def signature(self) -> tuple:
        return (self.tail, self.head, frozenset((c, p.edges) for c, p in self.terms))


@dataclass(frozen=True)
class RelationSet:
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        ids = [r.id for r in self.relations]
        if len(set(ids)) != len(ids):
            raise InvalidRelation("relation ids must be unique")

    def validate(self, Q: Quiver) -> "RelationSet":
        for r in self.relations:
            r.validate(Q)
        return self

    def __iter__(self):
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)

    def get(self, rid: str) -> Relation:
        for r in self.relations:
            if r.id == rid:
                return r
        raise KeyError(rid)

    def signatures(self) -> list[tuple]:
        return sorted((r.signature() for r in self.relations), key=repr)

    def same_as(self, other: "RelationSet") -> bool:
        """Equal up to relation ids: same tails, heads, coefficients and paths."""
        return self.signatures() == other.signatures()

    @property
    def is_quadratic(self) -> bool:
        return all(r.lengths <= {2} for r in self.relations)


def make_relation(rid: str, Q: Quiver, terms: Iterable[tuple[complex, Sequence[str]]],
                  tail: str | None = None, head: str | None = None) -> Relation:
    """Sum coefficients of repeated paths, drop zeros, infer tail/head."""
    acc: dict[tuple[str, ...], complex] = {}
    order = []
    for c, edges in terms:
        edges = tuple(edges)
        if edges not in acc:
            acc[edges] = 0j
            order.append(edges)
        acc[edges] += complex(c)
    kept = [(acc[e], Path(e)) for e in order if acc[e] != 0]
    if tail is None or head is None:
        if not kept:
            raise InvalidRelation(f"cannot infer endpoints of empty relation {rid}")
        tail = kept[0][1].tail(Q)
        head = kept[0][1].head(Q)
    r = Relation(rid, tail, head, tuple(kept))
    r.validate(Q)
    return r


@dataclass(frozen=True)
class Forms:
    hom0: int
    hom1: int
    rel: int
    ringel: int
    ringel_R: int

    def as_dict(self) -> dict[str, int]:
        return {"hom0": self.hom0, "hom1": self.hom1, "rel": self.rel,
                "ringel": self.ringel, "ringel_R": self.ringel_R}


def hom0_dim(Q: Quiver, v2, v1) -> int:
    v1, v2 = Q.dimvec(v1), Q.dimvec(v2)
    return sum(v1[k] * v2[k] for k in Q.vertices)


def hom1_dim(Q: Quiver, v2, v1) -> int:
    """dim Hom^1(Q, v2, v1): maps from the v2 copy to the v1 copy along edges."""
    v1, v2 = Q.dimvec(v1), Q.dimvec(v2)
    return sum(v2[e.tail] * v1[e.head] for e in Q.edges)


def rel_dim(Q: Quiver, R: RelationSet, v2, v1) -> int:
    v1, v2 = Q.dimvec(v1), Q.dimvec(v2)
    return sum(v2[r.tail] * v1[r.head] for r in R)


def dims_and_forms(Q: Quiver, R: RelationSet, v1, v2) -> Forms:
    hom0 = hom0_dim(Q, v2, v1)
    hom1 = hom1_dim(Q, v2, v1)
    rel = rel_dim(Q, R, v2, v1)
    return Forms(hom0, hom1, rel, hom0 - hom1, hom0 - hom1 + rel)
