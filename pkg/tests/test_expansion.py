import numpy as np
import pytest

from quiverflow import (Representation, adhm_to_handsaw_spec, build_negative_slice_quiver,
                        embed_restricted_rep, expand_restrict, fixture, relation_map, restrict_rep)
from quiverflow.errors import InvalidExpansion
from quiverflow.expansion import ExpansionSpec, trivial_spec
from quiverflow.suites import handsaw_restriction


def test_trivial_expansion_keeps_everything(jordan):
    Q, R = jordan
    r = expand_restrict(trivial_spec(Q, R, (2, 1)))
    assert r.fully_restricted and not r.dropped_paths
    assert [x.id for x in r.Rprime] == ["r_1[1>1]", "r_inf[inf>inf]"]
    assert len(r.Qprime.edges) == len(Q.edges)


def test_negative_slice_quiver(jordan):
    Q, R = jordan
    spec = build_negative_slice_quiver(Q, R, (1, 1), (1, 0))
    r = expand_restrict(spec)
    assert [e.id for e in r.Qprime.edges] == ["B#11", "Bbar#11", "a#11", "abar#11",
                                              "B#21", "Bbar#21", "abar#21"]
    assert [x.id for x in r.Rprime] == ["r_1[1#1>1#1]", "r_1[1#2>1#1]", "r_inf[inf#1>inf#1]"]
    assert not r.fully_restricted
    assert spec.meta["relation_split"]["Rel(v2,v1)"][0]["shape"] == [1, 1]


def test_negative_slice_rejects_empty_vertex(jordan):
    Q, R = jordan
    with pytest.raises(InvalidExpansion):
        build_negative_slice_quiver(Q, R, (1, 0), (1, 0))


def test_handsaw_matches_builder():
    spec, res = handsaw_restriction()
    _, Rh = fixture("handsaw:3")
    assert res.fully_restricted and not res.fully_restricted_all_lifts
    assert res.Rprime.same_as(Rh)
    assert [r.id for r in res.Rprime] == ["r[V1>V2]"]
    assert res.relation_origin == {"r[V1>V2]": "r"}
    retained = [w for w in res.dropped_paths if w["relation_retained"]]
    assert len(retained) == 4 and all(w["removed"] == 2 for w in retained)


def test_spec_validation(jordan):
    Q, R = jordan
    with pytest.raises(InvalidExpansion):
        ExpansionSpec(Q, R, (("p", "1", 1),), ())
    with pytest.raises(InvalidExpansion):
        ExpansionSpec(Q, R, (("p", "1", 1), ("q", "inf", 1)), (("x", "a", "p", "q"),))
    with pytest.raises(InvalidExpansion):
        ExpansionSpec(Q, R, (("p", "1", 0), ("q", "inf", 1)), ())


def test_embed_restrict_round_trip(jordan, rng):
    Q, R = jordan
    spec = build_negative_slice_quiver(Q, R, (1, 1), (2, 0))
    r = expand_restrict(spec)
    xp = Representation.random(r.Qprime, spec.part_dims, rng)
    x = embed_restricted_rep(spec, xp)
    assert x.dims.as_tuple() == (3, 1)
    back = restrict_rep(spec, r.Qprime, x)
    for e in r.Qprime.edges:
        assert np.array_equal(back.blocks[e.id], xp.blocks[e.id])
    # copy 2 maps into copy 1 only: the lower left block stays zero
    assert not x.blocks["B"][1:, :1].any()


def test_restricted_relations_vanish_after_embedding(rng):
    Q, R = fixture("adhm")
    spec = adhm_to_handsaw_spec(Q, R, (1, 1), (1, 1, 1))
    r = expand_restrict(spec)
    xp = Representation.zero(r.Qprime, spec.part_dims)
    x = embed_restricted_rep(spec, xp)
    assert relation_map(x, R).norm() == 0
    with pytest.raises(InvalidExpansion):
        adhm_to_handsaw_spec(Q, R, (1,), (1, 1, 1))


def test_stable_restricts_to_stable():
    from quiverflow import framed_stable
    from quiverflow.builders import handsaw_framing
    spec, res = handsaw_restriction()
    frame = handsaw_framing(res.Qprime)
    hits = 0
    for s in range(50):
        rng = np.random.default_rng(s)
        xp = Representation.random(res.Qprime, spec.part_dims, rng)
        if s % 3 == 0:
            xp = Representation(res.Qprime, xp.dims, {**xp.blocks, "a_1": np.zeros((1, 1))})
        if framed_stable(embed_restricted_rep(spec, xp), ("W",)):
            hits += 1
            assert framed_stable(xp, frame)
    assert hits > 0
