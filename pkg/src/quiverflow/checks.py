"""Structural checks on relation sets: quadratic, complete, homogeneous, loops."""
from __future__ import annotations

from dataclasses import dataclass, field

from .quiver import Quiver, RelationSet


@dataclass(frozen=True)
class RelationChecks:
    quadratic: bool
    complete: bool
    homogeneous: bool
    loop_condition: bool
    witnesses: tuple[dict, ...] = field(default_factory=tuple)

    def as_dict(self) -> dict:
        return {"quadratic": self.quadratic, "complete": self.complete,
                "homogeneous": self.homogeneous, "loop_condition": self.loop_condition,
                "witnesses": list(self.witnesses)}


def _first(violations: list[dict]) -> dict | None:
    if not violations:
        return None
    return min(violations, key=lambda w: (w.get("edge") or "", w.get("relation") or ""))


def _completeness(Q: Quiver, R: RelationSet) -> tuple[dict | None, dict | None]:
    rels = sorted(R, key=lambda r: r.id)
    edges = sorted(Q.edges, key=lambda e: e.id)
    # clause 1: every edge into h(r) leads some path of r
    v1 = []
    for r in rels:
        leading = {p.edges[-1] for c, p in r.terms if c != 0}
        for e in edges:
            if e.head == r.head and e.id not in leading:
                v1.append({"flag": "complete", "clause": 1, "edge": e.id, "relation": r.id,
                           "reason": f"no path of {r.id} ends with {e.id}"})
    # clause 2: every edge out of a relation tail trails exactly one path of one relation
    v2 = []
    for e in edges:
        tails = [r for r in rels if r.tail == e.tail]
        if not tails:
            continue
        if len(tails) > 1:
            v2.append({"flag": "complete", "clause": 2, "edge": e.id, "relation": tails[1].id,
                       "reason": f"{len(tails)} relations have tail {e.tail}: "
                                 + ",".join(r.id for r in tails)})
            continue
        r = tails[0]
        trailing = [p.edges for c, p in r.terms if c != 0 and p.edges[0] == e.id]
        if len(trailing) != 1:
            v2.append({"flag": "complete", "clause": 2, "edge": e.id, "relation": r.id,
                       "reason": f"{len(trailing)} paths of {r.id} start with {e.id}"})
    return _first(v1), _first(v2)


def _loop_violation(Q: Quiver, R: RelationSet) -> dict | None:
    bad = []
    for a in sorted(Q.loops(), key=lambda e: e.id):
        for r in sorted(R, key=lambda r: r.id):
            if r.tail != a.tail:
                continue
            head_loops = [e.id for e in Q.loops() if e.tail == r.head]
            for c, p in r.terms:
                if c == 0 or len(p) != 2 or p.edges[0] != a.id:
                    continue
                b = p.edges[1]
                partners = [lp for lp in head_loops if r.coefficient((b, lp)) != 0]
                if len(partners) != 1:
                    bad.append({"flag": "loop_condition", "edge": a.id, "relation": r.id,
                                "path": list(p.edges),
                                "reason": f"{len(partners)} loops a' at {r.head} give a path a'{b}"})
    return _first(bad)


def relation_set_checks(Q: Quiver, R: RelationSet) -> RelationChecks:
    R.validate(Q)
    witnesses = []

    quad_bad = [r for r in sorted(R, key=lambda r: r.id) if not r.lengths <= {2}]
    quadratic = not quad_bad
    if quad_bad:
        r = quad_bad[0]
        witnesses.append({"flag": "quadratic", "relation": r.id,
                          "reason": f"path lengths {sorted(r.lengths)}"})

    hom_bad = [r for r in sorted(R, key=lambda r: r.id) if len(r.lengths) > 1]
    homogeneous = not hom_bad
    if hom_bad:
        r = hom_bad[0]
        witnesses.append({"flag": "homogeneous", "relation": r.id,
                          "reason": f"path lengths {sorted(r.lengths)}"})

    if quadratic:
        w1, w2 = _completeness(Q, R)
        complete = w1 is None and w2 is None
        witnesses.extend(w for w in (w1, w2) if w is not None)
    else:
        complete = False
        witnesses.append({"flag": "complete", "reason": "not evaluated: relations are not quadratic"})

    wl = _loop_violation(Q, R)
    if wl is not None:
        witnesses.append(wl)
    return RelationChecks(quadratic, complete, homogeneous, wl is None, tuple(witnesses))
