import pytest
from hypothesis import given, strategies as st

from quiverflow import (DimensionVector, Quiver, RelationSet, dims_and_forms, fixture,
                        make_relation, relation_set_checks)
from quiverflow.builders import build_extended_adhm, build_handsaw, edgeless
from quiverflow.errors import (InvalidDimensionVector, InvalidParameter, InvalidPath, InvalidQuiver,
                               InvalidRelation)


def test_jordan_forms_diagonal(jordan):
    Q, R = jordan
    f = dims_and_forms(Q, R, (1, 1), (1, 1))
    assert f.as_dict() == {"hom0": 2, "hom1": 4, "rel": 2, "ringel": -2, "ringel_R": 0}


def test_jordan_forms_off_diagonal(jordan):
    Q, R = jordan
    f = dims_and_forms(Q, R, (1, 1), (1, 0))
    assert f.as_dict() == {"hom0": 1, "hom1": 3, "rel": 1, "ringel": -2, "ringel_R": -1}


@given(st.lists(st.integers(0, 5), min_size=3, max_size=3),
       st.lists(st.integers(0, 5), min_size=3, max_size=3))
def test_edgeless_ringel_is_dot_product(v1, v2):
    Q, R = edgeless(3)
    f = dims_and_forms(Q, R, v1, v2)
    assert f.ringel == sum(a * b for a, b in zip(v1, v2)) == f.ringel_R


@given(st.lists(st.integers(0, 4), min_size=2, max_size=2),
       st.lists(st.integers(0, 4), min_size=2, max_size=2),
       st.lists(st.integers(0, 4), min_size=2, max_size=2))
def test_forms_are_additive_in_each_argument(a, b, c):
    Q, R = fixture("jordan")
    A, B, C = Q.dimvec(a), Q.dimvec(b), Q.dimvec(c)
    lhs = dims_and_forms(Q, R, A + B, C)
    rhs1, rhs2 = dims_and_forms(Q, R, A, C), dims_and_forms(Q, R, B, C)
    assert lhs.ringel_R == rhs1.ringel_R + rhs2.ringel_R
    assert lhs.hom1 == rhs1.hom1 + rhs2.hom1


def test_dimension_vector_rejects_negative(jordan):
    Q, _ = jordan
    with pytest.raises(InvalidDimensionVector):
        Q.dimvec((1, -1))
    with pytest.raises(InvalidDimensionVector):
        Q.dimvec((1, 2, 3))


def test_dimension_vector_arithmetic(jordan):
    Q, _ = jordan
    v = Q.dimvec((2, 1))
    assert (v - Q.basis_vector("1")).as_tuple() == (1, 1)
    assert Q.dimvec((1, 1)).leq(v) and not v.leq(Q.dimvec((1, 1)))
    assert isinstance(v, DimensionVector) and v.total == 3


def test_quiver_validation():
    with pytest.raises(InvalidQuiver):
        Quiver.from_edges(["1"], [("a", "1", "2")])
    with pytest.raises(InvalidQuiver):
        Quiver.from_edges(["1", "1"], [])
    with pytest.raises(InvalidQuiver):
        Quiver.from_edges(["1"], [], framing="x")


def test_relation_path_must_compose(jordan):
    Q, _ = jordan
    with pytest.raises(InvalidPath):
        make_relation("bad", Q, [(1, ("a", "a"))])
    r = make_relation("r", Q, [(1, ("B",))])
    with pytest.raises(InvalidRelation):
        RelationSet((r, r))


def test_nakajima_relations_match_hand_expansion(jordan):
    Q, R = jordan
    r1, rinf = R.get("r_1"), R.get("r_inf")
    assert r1.coefficient(("Bbar", "B")) == 1
    assert r1.coefficient(("B", "Bbar")) == -1
    assert r1.coefficient(("abar", "a")) == 1
    assert rinf.coefficient(("a", "abar")) == -1 and len(rinf.terms) == 1


def test_a1_relations(a1):
    Q, R = a1
    assert R.get("r_1").coefficient(("abar", "a")) == 1
    assert R.get("r_inf").coefficient(("a", "abar")) == -1


def test_edgeless_has_no_relation_terms():
    Q, R = edgeless(2, framing=True)
    assert all(len(r.terms) == 0 for r in R)


@pytest.mark.parametrize("name", ["jordan", "a1", "handsaw:3", "handsaw:4", "adhm-ext:2:2,1",
                                  "adhm-ext:1:1", "adhm-ext:3:2,3,1"])
def test_fixtures_are_complete_and_quadratic(name):
    c = relation_set_checks(*fixture(name))
    assert c.quadratic and c.complete and c.homogeneous


def test_extra_relation_breaks_completeness(jordan):
    Q, R = jordan
    extra = make_relation("rp", Q, [(1, ("Bbar", "B"))])
    c = relation_set_checks(Q, RelationSet(tuple(R) + (extra,)))
    assert not c.complete
    clause2 = [w for w in c.witnesses if w.get("clause") == 2]
    assert clause2 and clause2[0]["edge"] == "B"


def test_handsaw_counts():
    _, R3 = build_handsaw(3)
    assert len(R3) == 1 and all(len(r.terms) == 3 for r in R3)
    _, R2 = build_handsaw(2)
    assert len(R2) == 0
    Q4, _ = build_handsaw(4)
    assert len(Q4.edges) == 11
    with pytest.raises(InvalidParameter):
        build_handsaw(1)


def test_extended_adhm_term_counts():
    _, R = build_extended_adhm(2, (2, 1))
    assert len(R.get("r").terms) == 3 and len(R.get("r'").terms) == 1
    _, R = build_extended_adhm(3, (2, 3, 1))
    assert len(R.get("r").terms) == 4
    _, R = build_extended_adhm(1, (1,))
    assert {p.edges for _, p in R.get("r").terms} == {("a1", "a1"), ("b2", "b1")}
