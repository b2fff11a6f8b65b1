import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quiverflow import Representation, fixture
from quiverflow.jsonio import (dims_from_any, dump_json, map_from_dict, quiver_from_dict,
                               quiver_to_dict, rep_from_dict, rep_to_dict)


@pytest.mark.parametrize("name", ["jordan", "a1", "adhm", "handsaw:3", "adhm-ext:2:2,1"])
def test_quiver_round_trip(name):
    Q, R = fixture(name)
    Q2, R2 = quiver_from_dict(json.loads(json.dumps(quiver_to_dict(Q, R))))
    assert Q2 == Q
    assert R2.same_as(R)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_rep_round_trip(seed):
    Q, _ = fixture("jordan")
    x = Representation.random(Q, (2, 1), np.random.default_rng(seed))
    y = rep_from_dict(Q, json.loads(dump_json(rep_to_dict(x))))
    assert np.array_equal(x.vector(), y.vector())


def test_missing_edges_are_zero(jordan):
    Q, _ = jordan
    x = rep_from_dict(Q, {"dims": {"1": 1, "inf": 1}, "blocks": {"abar": [[[1.5, 0.0]]]}})
    assert x.blocks["abar"][0, 0] == 1.5 and not x.blocks["B"].any()
    y = map_from_dict(Q, {}, (1, 0), (0, 1))
    assert y.norm() == 0


def test_dims_parsing(jordan):
    Q, _ = jordan
    for spec in ("2,1", '{"1": 2, "inf": 1}', [2, 1], {"1": 2, "inf": 1}):
        assert dims_from_any(Q, spec).as_tuple() == (2, 1)


def test_dump_is_strict_and_sorted():
    text = dump_json({"b": math.inf, "a": np.float64(1.0), "c": 1 + 2j})
    assert json.loads(text) == {"a": 1.0, "b": None, "c": [1.0, 2.0]}
    assert text.index('"a"') < text.index('"b"')
