from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quiverflow import canonical_central, fixture, induced_central, slope
from quiverflow.errors import InvalidDimensionVector, InvalidFraming, ZeroDimensionVector
from quiverflow.stability import slope_data


def test_canonical_elements(jordan):
    Q, _ = jordan
    assert canonical_central(Q, (2, 1)).scalars == (1, -2)
    assert canonical_central(Q, (1, 1)).scalars == (1, -1)
    a = canonical_central(Q, (0, 1))
    assert a.scalars == (1, 0) and a.is_admissible(Q.dimvec((0, 1)))


def test_canonical_needs_unit_framing(jordan):
    Q, _ = jordan
    with pytest.raises(InvalidFraming):
        canonical_central(Q, (1, 2))
    with pytest.raises(InvalidFraming):
        canonical_central(fixture("handsaw:3")[0], (1, 1, 1, 1, 1))


def test_induced_examples(jordan):
    Q, _ = jordan
    a = canonical_central(Q, (2, 1))
    v, vp = Q.dimvec((2, 1)), Q.dimvec((1, 1))
    assert slope(a, vp) == Fraction(-1, 2)
    ap = induced_central(a, v, vp)
    assert ap.scalars == (Fraction(3, 2), Fraction(-3, 2)) and ap.is_admissible(vp)
    assert induced_central(a, v, v) == a

    a11 = canonical_central(Q, (1, 1))
    ap = induced_central(a11, Q.dimvec((1, 1)), Q.dimvec((1, 0)))
    assert ap.scalars == (0, -2) and ap.restricted(Q.dimvec((1, 0))) == {"1": 0}


def test_slope_data(jordan):
    Q, _ = jordan
    a = canonical_central(Q, (1, 1))
    s = slope_data(a, Q.dimvec((1, 1)))
    assert (s.degree, s.rank, s.slope, s.admissible) == (0, 2, 0, True)
    assert slope(a, Q.dimvec((1, 0))) == 1
    assert slope(a, Q.dimvec((0, 1))) == -1
    with pytest.raises(ZeroDimensionVector):
        slope(a, Q.dimvec((0, 0)))


def test_induced_requires_subvector(jordan):
    Q, _ = jordan
    a = canonical_central(Q, (1, 1))
    with pytest.raises(InvalidDimensionVector):
        induced_central(a, Q.dimvec((1, 1)), Q.dimvec((2, 0)))


@given(st.integers(0, 6), st.integers(0, 6))
def test_induced_is_admissible(n, m):
    Q, _ = fixture("jordan")
    v = Q.dimvec((n + m, 1))
    a = canonical_central(Q, v)
    for vp in (Q.dimvec((m, 1)), Q.dimvec((n + m, 0)) if n + m else None):
        if vp is not None:
            assert induced_central(a, v, vp).is_admissible(vp)
