from fractions import Fraction

import numpy as np
import pytest

from quiverflow import (NotCritical, Representation, canonical_central, classify_critical,
                        critical_factorization, framed_stable, hessian_index,
                        hn_type_algebraic, is_alpha_stable)
from quiverflow.suites import random_critical_point


def test_classification_of_zero(jordan, alpha11):
    Q, _ = jordan
    c = classify_critical(Representation.zero(Q, (1, 1)), alpha11)
    assert c.hn.label == ((0, 1), (1, 0))
    assert c.hn.slopes == (Fraction(-1), Fraction(1))


def test_classification_of_minimiser(jordan_min, alpha11):
    c = classify_critical(jordan_min, alpha11)
    assert c.hn.label == ((1, 1),) and c.hn.slopes == (0,)


def test_zero_on_two_one(jordan):
    Q, _ = jordan
    c = classify_critical(Representation.zero(Q, (2, 1)), canonical_central(Q, (2, 1)))
    assert c.hn.label == ((0, 1), (2, 0))


def test_not_critical_raises(jordan, alpha11):
    Q, _ = jordan
    with pytest.raises(NotCritical):
        classify_critical(Representation(Q, (1, 1), {"a": [[1.0]], "abar": [[1.0]]}), alpha11)


def test_algebraic_hn(jordan, alpha11):
    Q, _ = jordan
    assert hn_type_algebraic(Representation(Q, (1, 1), {"a": [[1.0]]}), alpha11).label == \
        ((0, 1), (1, 0))
    x = Representation(Q, (1, 1), {"a": [[1.0]], "abar": [[1.0]]})
    assert hn_type_algebraic(x, alpha11).label == ((1, 1),)


def test_stability(jordan, jordan_min, alpha11):
    Q, _ = jordan
    assert is_alpha_stable(jordan_min, alpha11)
    assert not is_alpha_stable(Representation.zero(Q, (1, 1)), alpha11)
    assert framed_stable(jordan_min, ("inf",))


def test_hessian_indices(jordan, jordan_min, alpha11):
    Q, _ = jordan
    h = hessian_index(Representation.zero(Q, (1, 1)), alpha11)
    assert (h.index, h.nullity) == (2, 4)
    assert hessian_index(jordan_min, alpha11).index == 0
    assert hessian_index(Representation.zero(Q, (2, 1)), canonical_central(Q, (2, 1))).index == 4


def test_random_critical_points_classify():
    for s in range(5):
        x, xu, x2, alpha = random_critical_point(np.random.default_rng(s))
        c = classify_critical(x, alpha)
        assert c.hn.total() == x.dims


def test_critical_factorization(jordan, alpha11):
    Q, _ = jordan
    c = classify_critical(Representation.zero(Q, (1, 1)), alpha11)
    f = critical_factorization(c, alpha11)
    assert [b.as_tuple() for b, _ in f.blocks] == [(0, 1), (1, 0)]
    assert all(a.is_admissible(b) for b, a in f.blocks)
    a2 = canonical_central(Q, (2, 1))
    c = classify_critical(Representation.zero(Q, (2, 1)), a2)
    (b0, al0), (b1, al1) = critical_factorization(c, a2).blocks
    assert al0.restricted(b0) == {"inf": 0} and sum(v * b1[k] for k, v in al1.restricted(b1).items()) == 0
