"""Standard quivers with relations used throughout the package."""
from __future__ import annotations

from typing import Sequence

from .errors import InvalidParameter
from .quiver import Edge, Quiver, Relation, RelationSet, make_relation

FRAMING = "inf"


def conjugate_id(a: str) -> str:
    return a + "bar"


def build_nakajima_double(base: Quiver) -> tuple[Quiver, RelationSet]:
    """Double every edge of ``base`` and impose one relation per vertex.

    The base edges play the role of the chosen orientation; the relation at k
    is sum_{h(a)=k} a abar - sum_{t(a)=k} abar a.
    """
    edges = []
    for e in base.edges:
        edges.append(e)
        edges.append(Edge(conjugate_id(e.id), e.head, e.tail))
    Q = Quiver(base.vertices, tuple(edges), base.framing)
    rels = []
    for k in base.vertices:
        terms = []
        for e in base.edges:
            b = conjugate_id(e.id)
            if e.head == k:
                terms.append((1, (b, e.id)))
            if e.tail == k:
                terms.append((-1, (e.id, b)))
        if terms:
            rels.append(make_relation(f"r_{k}", Q, terms, k, k))
        else:
            rels.append(Relation(f"r_{k}", k, k, ()))
    return Q, RelationSet(tuple(rels)).validate(Q)


def jordan_double() -> tuple[Quiver, RelationSet]:
    """Framed Jordan quiver doubled: loops B, Bbar at 1; a: inf->1; abar: 1->inf."""
    base = Quiver.from_edges(["1", FRAMING], [("B", "1", "1"), ("a", FRAMING, "1")], FRAMING)
    return build_nakajima_double(base)


def a1_double() -> tuple[Quiver, RelationSet]:
    base = Quiver.from_edges(["1", FRAMING], [("a", FRAMING, "1")], FRAMING)
    return build_nakajima_double(base)


def edgeless(n: int = 2, framing: bool = False) -> tuple[Quiver, RelationSet]:
    verts = [str(i + 1) for i in range(n)]
    if framing:
        verts.append(FRAMING)
    return Quiver.from_edges(verts, [], FRAMING if framing else None), RelationSet(())


def adhm_quiver() -> tuple[Quiver, RelationSet]:
    """ADHM quiver with its single relation B1 B2 - B2 B1 + a b at V.

    Same edges as the Jordan double (B1 = B, B2 = Bbar, b = abar) but without a
    relation at the framing vertex W.
    """
    Q = Quiver.from_edges(["V", "W"], [("B1", "V", "V"), ("B2", "V", "V"),
                                       ("a", "W", "V"), ("b", "V", "W")], "W")
    r = make_relation("r", Q, [(1, ("B2", "B1")), (-1, ("B1", "B2")), (1, ("b", "a"))])
    return Q, RelationSet((r,)).validate(Q)


def build_handsaw(n: int) -> tuple[Quiver, RelationSet]:
    """Handsaw quiver with n framing vertices W1..Wn and n-1 vertices V1..V_{n-1}."""
    if n < 2:
        raise InvalidParameter("handsaw quivers need n >= 2")
    V = [f"V{k}" for k in range(1, n)]
    W = [f"W{k}" for k in range(1, n + 1)]
    edges = []
    edges += [(f"B1_{k}", f"V{k}", f"V{k + 1}") for k in range(1, n - 1)]
    edges += [(f"B2_{k}", f"V{k}", f"V{k}") for k in range(1, n)]
    edges += [(f"a_{k}", f"W{k}", f"V{k}") for k in range(1, n)]
    edges += [(f"b_{k}", f"V{k - 1}", f"W{k}") for k in range(2, n + 1)]
    Q = Quiver.from_edges(V + W, edges, None)
    rels = []
    for k in range(1, n - 1):
        rels.append(make_relation(f"r_{k}", Q, [
            (1, (f"B2_{k}", f"B1_{k}")),
            (-1, (f"B1_{k}", f"B2_{k + 1}")),
            (1, (f"b_{k + 1}", f"a_{k + 1}")),
        ]))
    return Q, RelationSet(tuple(rels)).validate(Q)


def handsaw_framing(Q: Quiver) -> tuple[str, ...]:
    return tuple(k for k in Q.vertices if k.startswith("W"))


def build_extended_adhm(n_loops: int, sigma: Sequence[int]) -> tuple[Quiver, RelationSet]:
    """Loops a1..an at V, b1: W->V, b2: V->W.

    ``sigma`` lists sigma(1), ..., sigma(n) (1-based images). The relations are
    r = sum_i a_i a_sigma(i) + b1 b2 at V and r' = b2 b1 at W.
    """
    sigma = tuple(int(s) for s in sigma)
    if n_loops < 1:
        raise InvalidParameter("need at least one loop")
    if sorted(sigma) != list(range(1, n_loops + 1)):
        raise InvalidParameter(f"{sigma} is not a permutation of 1..{n_loops}")
    edges = [(f"a{i}", "V", "V") for i in range(1, n_loops + 1)]
    edges += [("b1", "W", "V"), ("b2", "V", "W")]
    Q = Quiver.from_edges(["V", "W"], edges, "W")
    terms = [(1, (f"a{sigma[i - 1]}", f"a{i}")) for i in range(1, n_loops + 1)]
    terms.append((1, ("b2", "b1")))
    r = make_relation("r", Q, terms)
    rp = make_relation("r'", Q, [(1, ("b1", "b2"))])
    return Q, RelationSet((r, rp)).validate(Q)


FIXTURES = {
    "jordan": jordan_double,
    "a1": a1_double,
    "adhm": adhm_quiver,
}


def fixture(name: str) -> tuple[Quiver, RelationSet]:
    """Named fixtures: jordan, a1, adhm, handsaw:N, adhm-ext:N[:s1,s2,...]."""
    if name in FIXTURES:
        return FIXTURES[name]()
    kind, _, rest = name.partition(":")
    if kind == "handsaw":
        return build_handsaw(int(rest or 3))
    if kind == "adhm-ext":
        n, _, perm = rest.partition(":")
        n = int(n or 1)
        sigma = [int(s) for s in perm.split(",")] if perm else list(range(1, n + 1))
        return build_extended_adhm(n, sigma)
    if kind == "edgeless":
        return edgeless(int(rest or 2))
    raise InvalidParameter(f"unknown fixture {name!r}")
