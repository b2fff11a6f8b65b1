import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import dnu_oracle, rho_oracle
from quiverflow import (GradedLinearMap, LieAlgebraElement, Representation, block_sum, d_nu,
                        d_nu_adjoint, fixture, inf_action, inf_action_adjoint, moment_map,
                        relation_map)
from quiverflow.deformation import dnu_matrix, rho_matrix
from quiverflow.errors import ShapeError
from quiverflow.rep import evaluate_path, group_action, path_derivative, random_unitary

SQRT2 = math.sqrt(2.0)


def test_path_evaluation(jordan):
    Q, _ = jordan
    x = Representation(Q, (1, 1), {"a": [[1.0]], "abar": [[1.0]]})
    assert evaluate_path(x, ("abar", "a"))[0, 0] == 1
    assert evaluate_path(Representation(Q, (1, 1), {"B": [[2.0]]}), ("B", "B"))[0, 0] == 4
    assert not evaluate_path(Representation.zero(Q, (2, 1)), ("B", "Bbar")).any()


def test_relation_map_examples(jordan):
    Q, R = jordan
    nu = relation_map(Representation(Q, (1, 1), {"abar": [[SQRT2]]}), R)
    assert nu.norm() == 0
    nu = relation_map(Representation(Q, (1, 1), {"a": [[1.0]], "abar": [[1.0]]}), R)
    assert nu.blocks["r_1"][0, 0] == 1 and nu.blocks["r_inf"][0, 0] == -1


def test_path_derivative_examples(jordan):
    Q, _ = jordan
    x1 = Representation(Q, (1, 1), {"B": [[1.0]]})
    x2 = Representation.zero(Q, (1, 1))
    dx = GradedLinearMap(Q, (1, 1), (1, 1), {"Bbar": [[1.0]]})
    # path B Bbar: apply Bbar then B
    assert path_derivative(x1, x2, dx, ("Bbar", "B"))[0, 0] == 1
    dx = GradedLinearMap.random(Q, (1, 1), (1, 1), np.random.default_rng(0))
    assert np.allclose(path_derivative(x1, x2, dx, ("a",)), dx.blocks["a"])


def test_d_nu_examples(jordan, jordan_min):
    Q, R = jordan
    x2 = Representation.zero(Q, (1, 0))
    dx = GradedLinearMap.random(Q, (1, 0), (1, 1), np.random.default_rng(1))
    assert d_nu(jordan_min, x2, R, dx).norm() == 0
    x1 = Representation(Q, (1, 1), {"B": [[1.0]]})
    t = 0.7 - 0.2j
    dx = GradedLinearMap(Q, (1, 0), (1, 1), {"Bbar": [[t]]})
    assert d_nu(x1, x2, R, dx).blocks["r_1"][0, 0] == pytest.approx(t)


def test_d_nu_adjoint_example(jordan, jordan_min):
    Q, R = jordan
    from quiverflow.rep import RelationValue
    x2 = Representation.zero(Q, (1, 0))
    u = RelationValue(R, x2.dims, jordan_min.dims, {"r_1": [[1.0]]})
    assert d_nu_adjoint(jordan_min, x2, R, u).norm() == 0


def test_inf_action_examples(jordan):
    Q, _ = jordan
    x = Representation(Q, (1, 1), {"a": [[1.0]]})
    u = LieAlgebraElement(Q, (1, 1), (1, 1), {"1": [[1.0]], "inf": [[0.0]]})
    assert inf_action(x, u).blocks["a"][0, 0] == 1
    ident = LieAlgebraElement.scalar(Q, (1, 1), {"1": 1, "inf": 1})
    assert inf_action(x, ident).norm() == 0


def test_inf_action_adjoint_example(jordan, jordan_min):
    Q, _ = jordan
    dx = GradedLinearMap(Q, (1, 1), (1, 1), {"abar": [[1.0]]})
    out = inf_action_adjoint(jordan_min, dx)
    assert out.blocks["1"][0, 0] == pytest.approx(-SQRT2)
    assert out.blocks["inf"][0, 0] == pytest.approx(SQRT2)


def test_moment_map_at_minimiser(jordan, jordan_min):
    mu = moment_map(jordan_min)
    assert mu.blocks["1"][0, 0] == pytest.approx(1j)
    assert mu.blocks["inf"][0, 0] == pytest.approx(-1j)
    assert moment_map(Representation.zero(jordan[0], (2, 1))).norm() == 0


def test_shape_errors(jordan):
    Q, _ = jordan
    with pytest.raises(ShapeError):
        Representation(Q, (1, 1), {"B": np.zeros((2, 2))})
    with pytest.raises(ShapeError):
        Representation(Q, (1, 1), {"nope": [[1.0]]})


FIXTURES = ["jordan", "a1", "adhm", "handsaw:3", "adhm-ext:2:2,1"]


def _dims(Q, draw):
    return Q.dimvec([draw(st.integers(0, 2)) for _ in Q.vertices])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FIXTURES), st.data(), st.integers(0, 2**32 - 1))
def test_matrices_match_kronecker_oracle(name, data, seed):
    Q, R = fixture(name)
    rng = np.random.default_rng(seed)
    v1, v2 = _dims(Q, data.draw), _dims(Q, data.draw)
    x1, x2 = Representation.random(Q, v1, rng), Representation.random(Q, v2, rng)
    assert np.allclose(rho_matrix(x1, x2), rho_oracle(Q, x1, x2), atol=1e-12)
    assert np.allclose(dnu_matrix(x1, x2, R), dnu_oracle(Q, R, x1, x2), atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FIXTURES), st.integers(0, 2**32 - 1))
def test_moment_map_equivariance(name, seed):
    Q, _ = fixture(name)
    rng = np.random.default_rng(seed)
    v = Q.dimvec([int(rng.integers(0, 3)) for _ in Q.vertices])
    x = Representation.random(Q, v, rng)
    k = {j: random_unitary(v[j], rng) for j in Q.vertices}
    lhs = moment_map(group_action(k, x))
    mu = moment_map(x)
    rhs = {j: k[j] @ mu.blocks[j] @ k[j].conj().T for j in Q.vertices}
    err = math.sqrt(sum(np.linalg.norm(lhs.blocks[j] - rhs[j]) ** 2 for j in Q.vertices))
    assert err <= 1e-10 * (1 + x.norm() ** 2)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FIXTURES), st.integers(0, 2**32 - 1))
def test_moment_map_values_are_skew_hermitian(name, seed):
    Q, _ = fixture(name)
    rng = np.random.default_rng(seed)
    x = Representation.random(Q, Q.dimvec([2] * len(Q.vertices)), rng)
    assert moment_map(x).skew_defect() <= 1e-12 * (1 + x.norm() ** 2)


def test_inf_action_adjoint_pairs_with_image(jordan):
    Q, _ = jordan
    rng = np.random.default_rng(3)
    x = Representation.random(Q, (2, 1), rng)
    u0 = LieAlgebraElement.random(Q, (2, 1), (2, 1), rng)
    u = LieAlgebraElement.random(Q, (2, 1), (2, 1), rng)
    dx = inf_action(x, u0)
    lhs = inf_action(x, u).inner(dx)
    rhs = u.inner(inf_action_adjoint(x, dx))
    assert abs(lhs - rhs) <= 1e-10 * u.norm() * dx.norm() * (1 + x.norm())


def test_block_sum_layout(jordan):
    Q, _ = jordan
    rng = np.random.default_rng(4)
    x1, x2 = Representation.random(Q, (1, 1), rng), Representation.random(Q, (1, 0), rng)
    dx = GradedLinearMap.random(Q, (1, 0), (1, 1), rng)
    X = block_sum(x1, x2, dx)
    assert X.dims.as_tuple() == (2, 1)
    assert X.blocks["B"][0, 1] == dx.blocks["B"][0, 0]
    assert X.blocks["B"][1, 0] == 0
