"""Seeded verification suites.

Every trial draws from its own stream ``rng_for(seed, suite, trial)`` so a
failing trial can be rerun alone and suites do not depend on each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .builders import fixture, handsaw_framing
from .config import DEFAULT, Tolerances, rng_for
from .critical import classify_critical, framed_stable, hessian_index, hn_type_algebraic
from .deformation import (coker_dnu_check, deformation_complex, dnu_matrix,
                          project_to_relations, trace_free_rank)
from .errors import NotOnFlowLine, NumericalFailure, PreconditionFailed
from .expansion import (adhm_to_handsaw_spec, build_negative_slice_quiver, embed_restricted_rep,
                        expand_restrict, lifted_relation_blocks)
from .flow import CONVERGED, integrate_flow
from .jsonio import dump_json
from .ledger import build_ledger
from .linalg import numerical_rank
from .quiver import Quiver, RelationSet, hom1_dim
from .rep import (GradedLinearMap, LieAlgebraElement, Representation, RelationValue, block_sum,
                  d_nu, d_nu_adjoint, inf_action, inf_action_adjoint, random_blocks,
                  random_unitary, rel_space, relation_blocks, relation_map)
from .slice_hecke import (AdjacentPair, bundle_ranks, negative_slice_at,
                          sample_flow_line_point)
from .stability import canonical_central, induced_central

FIXTURE_CYCLE = ("jordan", "a1", "adhm", "handsaw:3", "handsaw:4", "adhm-ext:2:2,1",
                 "adhm-ext:3:2,3,1")


@dataclass
class Property:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    required: int | None = None  # minimum number of passing checks, default all

    @property
    def passed(self) -> bool:
        need = self.checked if self.required is None else self.required
        return self.checked > 0 and self.checked - len(self.failures) >= need

    def record(self, ok: bool, trial: int, **detail):
        self.checked += 1
        if not ok:
            self.failures.append({"trial": trial, **detail})

    def as_dict(self) -> dict:
        return {"passed": self.passed, "checked": self.checked, "required": self.required,
                "failures": self.failures}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    properties: dict = field(default_factory=dict)
    margins: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def prop(self, name: str, required: int | None = None) -> Property:
        if name not in self.properties:
            self.properties[name] = Property(name, required=required)
        return self.properties[name]

    def margin(self, name: str, value: float):
        v = float(value)
        self.margins[name] = min(self.margins.get(name, math.inf), v)

    @property
    def passed(self) -> bool:
        return bool(self.properties) and all(p.passed for p in self.properties.values())

    @property
    def reproduce(self) -> str:
        return f"quiverflow verify --suite {self.suite} --seed {self.seed} --trials {self.trials}"

    def as_dict(self) -> dict:
        failed = [n for n, p in self.properties.items() if not p.passed]
        return {"suite": self.suite, "seed": self.seed, "trials": self.trials,
                "passed": self.passed, "failed": failed,
                "properties": {n: p.as_dict() for n, p in self.properties.items()},
                "margins": {k: (v if math.isfinite(v) else None) for k, v in self.margins.items()},
                "notes": self.notes,
                "reproduce": None if self.passed else self.reproduce}

    def to_json(self) -> str:
        return dump_json(self.as_dict())


def _rand_dims(Q: Quiver, rng, hi: int = 3, nonzero: bool = True):
    while True:
        v = Q.dimvec({k: int(rng.integers(0, hi + 1)) for k in Q.vertices})
        if not nonzero or not v.is_zero:
            return v


# --- adjointness ---------------------------------------------------------------

def suite_adjointness(seed: int, trials: int, tol: Tolerances) -> SuiteReport:
    rep = SuiteReport("adjointness", seed, trials)
    p_rho, p_nu = rep.prop("rho_adjoint"), rep.prop("dnu_adjoint")
    for t in range(trials):
        rng = rng_for(seed, "adjointness", t)
        Q, R = fixture(FIXTURE_CYCLE[t % len(FIXTURE_CYCLE)])
        v1, v2 = _rand_dims(Q, rng), _rand_dims(Q, rng)
        x1, x2 = Representation.random(Q, v1, rng), Representation.random(Q, v2, rng)
        u = LieAlgebraElement.random(Q, v2, v1, rng)
        dx = GradedLinearMap.random(Q, v2, v1, rng)
        lhs = inf_action(x1, u, x2).inner(dx)
        rhs = u.inner(inf_action_adjoint(x1, dx, x2))
        scale = u.norm() * dx.norm() * (1.0 + x1.norm() + x2.norm())
        res = abs(lhs - rhs) / max(scale, 1e-300)
        p_rho.record(res <= tol.adjoint_tol, t, residual=res)
        rep.margin("rho_adjoint", tol.adjoint_tol / max(res, 1e-300))

        w = RelationValue(R, v2, v1, random_blocks(rel_space(R, v2, v1), rng))
        lhs = d_nu(x1, x2, R, dx).inner(w)
        rhs = dx.inner(d_nu_adjoint(x1, x2, R, w))
        scale = w.norm() * dx.norm() * (1.0 + x1.norm() + x2.norm())
        res = abs(lhs - rhs) / max(scale, 1e-300)
        p_nu.record(res <= tol.adjoint_tol, t, residual=res)
        rep.margin("dnu_adjoint", tol.adjoint_tol / max(res, 1e-300))
    return rep


# --- linearisation -----------------------------------------------------------------

LINEARIZATION_FIXTURES = ("jordan", "a1", "adhm", "handsaw:3", "handsaw:4", "adhm-ext:2:2,1",
                          "adhm-ext:3:2,3,1", "adhm-ext:2:1,2")


def suite_linearization(seed: int, trials: int, tol: Tolerances) -> SuiteReport:
    """nu of [[x1, dx], [0, x2]] equals nu(x1) + nu(x2) plus d nu in the corner."""
    rep = SuiteReport("linearization", seed, trials)
    p = rep.prop("block_triangular_exact")
    for t in range(trials):
        rng = rng_for(seed, "linearization", t)
        name = LINEARIZATION_FIXTURES[t % len(LINEARIZATION_FIXTURES)]
        Q, R = fixture(name)
        v1, v2 = _rand_dims(Q, rng), _rand_dims(Q, rng)
        x1, x2 = Representation.random(Q, v1, rng), Representation.random(Q, v2, rng)
        dx = GradedLinearMap.random(Q, v2, v1, rng)
        full = relation_blocks(relation_map(block_sum(x1, x2, dx), R), v1, v2)
        base = relation_blocks(relation_map(block_sum(x1, x2), R), v1, v2)
        lin = d_nu(x1, x2, R, dx)
        num = den = 0.0
        for r in R:
            corner = full["12"][r.id] - base["12"][r.id] - lin.blocks[r.id]
            diag = [full[b][r.id] - base[b][r.id] for b in ("11", "21", "22")]
            num += np.linalg.norm(corner) ** 2 + sum(np.linalg.norm(d) ** 2 for d in diag)
            den += (np.linalg.norm(full["12"][r.id]) ** 2 + np.linalg.norm(base["11"][r.id]) ** 2
                    + np.linalg.norm(base["22"][r.id]) ** 2 + np.linalg.norm(lin.blocks[r.id]) ** 2)
        rel = math.sqrt(num) / max(math.sqrt(den), 1e-300)
        p.record(rel <= tol.linearize_tol, t, fixture=name, relative_error=rel)
        rep.margin("linearization", tol.linearize_tol / max(rel, 1e-300))
    return rep


# --- index identity ------------------------------------------------------------------

INDEX_FIXTURES = ("jordan", "a1", "adhm", "handsaw:3", "adhm-ext:2:2,1", "edgeless:2")


def suite_index(seed: int, trials: int, tol: Tolerances, max_resample: int = 50) -> SuiteReport:
    """h0 - h1 + h2 equals the relation-corrected Ringel form on nu^{-1}(0) samples."""
    rep = SuiteReport("index", seed, trials)
    p = rep.prop("euler_equals_ringel_R")
    rejected = 0
    for t in range(trials):
        rng = rng_for(seed, "index", t)
        name = INDEX_FIXTURES[t % len(INDEX_FIXTURES)]
        Q, R = fixture(name)
        for _ in range(max_resample):
            v1, v2 = _rand_dims(Q, rng, 2), _rand_dims(Q, rng, 2)
            try:
                x1 = project_to_relations(Representation.random(Q, v1, rng), R)
                x2 = project_to_relations(Representation.random(Q, v2, rng), R)
            except NumericalFailure:
                rejected += 1
                continue
            d = deformation_complex(Q, R, x1, x2, tol)
            if d.min_margin < tol.sample_margin:
                rejected += 1
                continue
            p.record(d.euler_char == d.ringel_R, t, fixture=name, v1=v1.as_dict(),
                     v2=v2.as_dict(), h=[d.h0, d.h1, d.h2], ringel_R=d.ringel_R)
            rep.margin("rank", d.min_margin)
            break
        else:
            p.record(False, t, fixture=name, reason="no sample with an adequate margin")
    rep.notes["rejected_samples"] = rejected
    return rep


# --- cokernel formula ------------------------------------------------------------------

COKERNEL_FIXTURES = ("jordan", "a1", "handsaw:3")


def _stable_random(Q: Quiver, v, rng, framing, tries: int = 50) -> Representation:
    for _ in range(tries):
        x = Representation.random(Q, v, rng)
        if framed_stable(x, framing):
            return x
    raise PreconditionFailed(f"no stable representation found on {v}")


def _framing_of(Q: Quiver) -> tuple[str, ...]:
    return (Q.framing,) if Q.framing is not None else handsaw_framing(Q)


def _stable_dims(name: str, Q: Quiver, rng):
    if name == "handsaw:3":
        return Q.dimvec({k: (int(rng.integers(1, 3)) if k.startswith("V") else 1)
                         for k in Q.vertices})
    if name == "a1":
        return Q.dimvec({"1": 1, "inf": 1})
    return Q.dimvec({"1": int(rng.integers(1, 4)), "inf": 1})


def suite_cokernel(seed: int, trials: int, tol: Tolerances) -> SuiteReport:
    rep = SuiteReport("cokernel", seed, trials)
    p = rep.prop("numeric_equals_formula")
    for t in range(trials):
        rng = rng_for(seed, "cokernel", t)
        name = COKERNEL_FIXTURES[t % len(COKERNEL_FIXTURES)]
        Q, R = fixture(name)
        v1 = _stable_dims(name, Q, rng)
        x1 = _stable_random(Q, v1, rng, _framing_of(Q))
        v2 = _rand_dims(Q, rng, 2)
        c = coker_dnu_check(Q, R, x1, v2, tol)
        p.record(c.numeric == c.formula, t, fixture=name, numeric=c.numeric, formula=c.formula)
        rep.margin("rank", c.margin)
    return rep


# --- flow ------------------------------------------------------------------------------------

def jordan_start(Q: Quiver) -> Representation:
    return Representation(Q, (1, 1), {"a": [[1.0]], "abar": [[1.0]]})


def _flow_start(Q: Quiver, t: int, rng) -> Representation:
    """Random Jordan start; every third is unstable in one of two ways."""
    n = 1 + t % 2
    v = Q.dimvec((n, 1))
    x = Representation.random(Q, v, rng)
    kind = (t // 2) % 3
    if kind == 1:
        x = Representation(Q, v, {**x.blocks, "abar": np.zeros((1, n))})
    elif kind == 2 and n == 2:
        # B, Bbar share an eigenvector killed by abar
        U = random_unitary(2, rng)
        B = np.triu(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        Bb = np.triu(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        ab = np.array([[0.0, rng.standard_normal() + 1j * rng.standard_normal()]])
        x = Representation(Q, v, {"B": U @ B @ U.conj().T, "Bbar": U @ Bb @ U.conj().T,
                                  "a": x.blocks["a"], "abar": ab @ U.conj().T})
    return x


def suite_flow(seed: int, trials: int, tol: Tolerances) -> SuiteReport:
    rep = SuiteReport("flow", seed, trials)
    Q, _ = fixture("jordan")
    v = Q.dimvec((1, 1))
    alpha = canonical_central(Q, v)
    res = integrate_flow(jordan_start(Q), alpha, tol)
    lim = res.limit
    gap = abs(lim.blocks["abar"][0, 0]) ** 2 - abs(lim.blocks["a"][0, 0]) ** 2
    rep.prop("jordan_start_converges").record(
        res.status == CONVERGED and res.f_limit <= 1e-10, 0, f_limit=res.f_limit, status=res.status)
    rep.prop("jordan_start_norm_gap").record(abs(gap - 2.0) <= 1e-5, 0, gap=gap)
    rep.notes["jordan_start"] = {"f_limit": res.f_limit, "norm_gap": gap}

    mono, drift = rep.prop("f_nonincreasing"), rep.prop("trace_drift")
    agree = rep.prop("classification_matches", required=math.ceil(0.98 * trials))
    for t in range(trials):
        rng = rng_for(seed, "flow", t)
        x0 = _flow_start(Q, t, rng)
        a = canonical_central(Q, x0.dims)
        r = integrate_flow(x0, a, tol)
        slack = 8 * np.finfo(float).eps * (1.0 + np.abs(r.f_values[:-1]))
        mono.record(bool(np.all(np.diff(r.f_values) <= slack)), t, max_increase=r.max_increase)
        drift.record(r.invariant_drift <= tol.trace_drift, t, drift=r.invariant_drift)
        rep.margin("trace_drift", tol.trace_drift / max(r.invariant_drift, 1e-300))
        expected = hn_type_algebraic(x0, a)
        try:
            c = classify_critical(r.limit, a, tol)
        except NumericalFailure as exc:
            agree.record(False, t, status=r.status, error=str(exc))
            continue
        agree.record(c.hn.label == expected.label, t, status=r.status,
                     got=[list(b) for b in c.hn.label], expected=[list(b) for b in expected.label],
                     eigen_margin=c.eigen_margin)
        rep.margin("cluster_gap", c.eigen_margin)
    return rep


# --- adjacent pairs ----------------------------------------------------------------------

def minimizer(Q: Quiver, v, alpha, rng, tol: Tolerances = DEFAULT, tries: int = 10) -> Representation:
    """Flow limit of a random start on v for the element alpha."""
    v = Q.dimvec(v)
    for _ in range(tries):
        r = integrate_flow(Representation.random(Q, v, rng), alpha, tol)
        if r.status == CONVERGED and r.f_limit <= 1e-12:
            return r.limit
    raise PreconditionFailed(f"no minimiser found on {v}")


ADJACENT_CASES = (((2, 1), (0, 1)), ((2, 1), (1, 1)), ((3, 1), (1, 1)), ((3, 1), (2, 1)))


def jordan_pair(v, v_u, rng, tol: Tolerances = DEFAULT) -> AdjacentPair:
    Q, _ = fixture("jordan")
    v, v_u = Q.dimvec(v), Q.dimvec(v_u)
    alpha = canonical_central(Q, v)
    if v_u[Q.vertices[0]] == 0:
        xu = Representation.zero(Q, v_u)
    else:
        xu = minimizer(Q, v_u, induced_central(alpha, v, v_u), rng, tol)
    return AdjacentPair(Q, v, v_u, "1", xu, alpha)


def suite_adjacent(seed: int, trials: int, tol: Tolerances) -> SuiteReport:
    rep = SuiteReport("adjacent", seed, trials)
    p = rep.prop("flows_to_v_ell")
    for t in range(trials):
        rng = rng_for(seed, "adjacent", t)
        v, v_u = ADJACENT_CASES[t % len(ADJACENT_CASES)]
        pair = jordan_pair(v, v_u, rng, tol)
        dx = sample_flow_line_point(pair, rng, scale=float(rng.uniform(0.3, 2.0)), tol=tol)
        x0 = block_sum(pair.x_u, pair.zero_rest(), dx)
        r = integrate_flow(x0, pair.alpha, tol)
        try:
            c = classify_critical(r.limit, pair.alpha, tol)
        except NumericalFailure as exc:
            p.record(False, t, error=str(exc))
            continue
        p.record(c.hn.blocks[0] == pair.v_ell, t, v=list(v), v_u=list(v_u),
                 got=[list(b) for b in c.hn.label], expected=list(pair.v_ell.as_tuple()))
        rep.margin("cluster_gap", c.eigen_margin)
    return rep


# --- Hessian -----------------------------------------------------------------------------------

def random_critical_point(rng, tol: Tolerances = DEFAULT):
    """x_u + x2 with x_u a minimiser for the induced element and x2 normal commuting."""
    Q, _ = fixture("jordan")
    n = int(rng.integers(1, 4))
    j = int(rng.integers(0, n))
    v, v_u = Q.dimvec((n, 1)), Q.dimvec((j, 1))
    v2 = v - v_u
    alpha = canonical_central(Q, v)
    xu = (Representation.zero(Q, v_u) if j == 0
          else minimizer(Q, v_u, induced_central(alpha, v, v_u), rng, tol))
    U = random_unitary(v2["1"], rng)
    diag = lambda: np.diag(rng.standard_normal(v2["1"]) + 1j * rng.standard_normal(v2["1"]))
    blocks = {"B": U @ diag() @ U.conj().T, "Bbar": U @ diag() @ U.conj().T}
    if rng.random() < 0.3:
        blocks = {}
    x2 = Representation(Q, v2, blocks)
    return block_sum(xu, x2), xu, x2, alpha


def suite_hessian(seed: int, trials: int, tol: Tolerances) -> SuiteReport:
    rep = SuiteReport("hessian", seed, trials)
    Q, _ = fixture("jordan")
    v = Q.dimvec((1, 1))
    h = hessian_index(Representation.zero(Q, v), canonical_central(Q, v), tol)
    rep.prop("zero_point_index_2").record(h.index == 2, 0, index=h.index)
    p = rep.prop("index_is_twice_slice_dim")
    for t in range(trials):
        rng = rng_for(seed, "hessian", t)
        x, xu, x2, alpha = random_critical_point(rng, tol)
        hi = hessian_index(x, alpha, tol)
        s = len(negative_slice_at(xu, RelationSet(()), x2.dims, x2, tol))
        p.record(hi.index == 2 * s, t, dims=x.dims.as_dict(), index=hi.index, slice_dim=s)
        rep.margin("hessian", hi.eigen_margin)
    return rep


# --- weak transversality -----------------------------------------------------------------------

def suite_transversality(seed: int, trials: int, tol: Tolerances) -> SuiteReport:
    rep = SuiteReport("transversality", seed, trials)
    p_sum, p_t = rep.prop("rank_V_equals_D_plus_T"), rep.prop("rank_T_formula")
    p_nu = rep.prop("nu_matches_codimension")
    pair = jordan_pair((2, 1), (0, 1), rng_for(seed, "transversality-pair"), tol)
    expected_T = 2 * hom1_dim(pair.quiver, pair.kernel_dims, pair.e_k)
    for t in range(trials):
        rng = rng_for(seed, "transversality", t)
        try:
            dx = sample_flow_line_point(pair, rng, scale=float(rng.uniform(0.2, 3.0)), tol=tol)
        except NotOnFlowLine as exc:
            p_sum.record(False, t, error=str(exc))
            continue
        b = bundle_ranks(pair, dx, tol, with_index=False)
        p_sum.record(b.rank_V == b.rank_D + b.rank_T, t, **b.as_dict())
        p_t.record(b.rank_T == expected_T, t, rank_T=b.rank_T, expected=expected_T)
        p_nu.record(b.nu == b.codim_numeric, t, nu=b.nu, codim=b.codim_numeric)
        rep.margin("rank", min(b.margins.values()))
    return rep


# --- expansion / restriction ------------------------------------------------------------------------

def handsaw_restriction():
    Qa, Ra = fixture("adhm")
    spec = adhm_to_handsaw_spec(Qa, Ra, (1, 1), (1, 1, 1))
    return spec, expand_restrict(spec)


def suite_restriction(seed: int, trials: int, tol: Tolerances) -> SuiteReport:
    rep = SuiteReport("restriction", seed, trials)
    spec, res = handsaw_restriction()
    _, Rh = fixture("handsaw:3")
    rep.prop("handsaw_fully_restricted").record(res.fully_restricted, 0)
    rep.prop("handsaw_relations_match").record(res.Rprime.same_as(Rh), 0,
                                               got=[str(s) for s in res.Rprime.signatures()])
    Qj, Rj = fixture("jordan")
    ns = expand_restrict(build_negative_slice_quiver(Qj, Rj, (1, 1), (1, 0)))
    rep.prop("negative_slice_not_fully_restricted").record(not ns.fully_restricted, 0)

    Qp, Rp = res.Qprime, res.Rprime
    p_tr, p_surj = rep.prop("relation_transfer_exact"), rep.prop("dnu_surjective_trace_free")
    frame = handsaw_framing(Qp)
    for t in range(trials):
        rng = rng_for(seed, "restriction", t)
        xp = Representation.random(Qp, Qp.dimvec(spec.part_dims), rng)
        base = relation_map(embed_restricted_rep(spec, xp), spec.relations)
        lifted = lifted_relation_blocks(spec, base.blocks)
        mine = relation_map(xp, Rp)
        err = 0.0
        for rid, b in lifted.items():
            want = mine.blocks.get(rid)
            err = max(err, float(np.max(np.abs(b - want))) if want is not None
                      else float(np.max(np.abs(b), initial=0.0)))
        p_tr.record(err <= 1e-14 * (1.0 + xp.norm()) ** 2, t, error=err)

        try:
            x = project_to_relations(_stable_random(Qp, xp.dims, rng, frame), Rp)
        except NumericalFailure as exc:
            p_surj.record(False, t, error=str(exc))
            continue
        if not framed_stable(x, frame):
            p_surj.record(False, t, reason="projected sample is not stable")
            continue
        info = numerical_rank(dnu_matrix(x, x, Rp), tol.rank_rtol, 1.0 + x.norm())
        target = trace_free_rank(Rp, x, x)
        p_surj.record(info.rank == target, t, rank=info.rank, target=target)
        rep.margin("dnu_rank", info.margin)
    return rep


# --- ledger ------------------------------------------------------------------------------------------

JORDAN_LEDGER = {"lambda_u": 2, "nu": 0, "euler_degree": 0, "d": 0, "shift": -2,
                 "grassmannian_dim": 0}


def suite_ledger_jordan(seed: int, trials: int, tol: Tolerances) -> SuiteReport:
    rep = SuiteReport("ledger-jordan", seed, trials)
    Q, R = fixture("jordan")
    pair = AdjacentPair(Q, (1, 1), (0, 1), "1", Representation.zero(Q, (0, 1)))
    L = build_ledger(pair, R, samples=max(trials, 1), seed=seed, tol=tol)
    again = build_ledger(pair, R, samples=max(trials, 1), seed=seed, tol=tol)
    rep.prop("worked_values").record(L.summary() == JORDAN_LEDGER, 0, got=L.summary())
    rep.prop("byte_reproducible").record(L.to_json() == again.to_json(), 0)
    rep.prop("d_formula_equals_adjoint_rank").record(
        L.provenance["d_matches_formula"] and len(L.provenance["d_numeric"]) == max(trials, 1), 0,
        d=L.d, numeric=L.provenance["d_numeric"])
    rep.notes["ledger"] = L.summary()
    return rep


SUITES: dict[str, tuple[Callable, int]] = {
    "adjointness": (suite_adjointness, 1000),
    "linearization": (suite_linearization, 500),
    "index": (suite_index, 200),
    "cokernel": (suite_cokernel, 100),
    "flow": (suite_flow, 100),
    "adjacent": (suite_adjacent, 50),
    "hessian": (suite_hessian, 20),
    "transversality": (suite_transversality, 50),
    "restriction": (suite_restriction, 50),
    "ledger-jordan": (suite_ledger_jordan, 5),
}


def run_suite(name: str, seed: int = 0, trials: int | None = None,
              tol: Tolerances = DEFAULT) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(name)
    fn, default = SUITES[name]
    n = default if trials is None else int(trials)
    if n < 1:
        raise PreconditionFailed("trials must be at least 1")
    return fn(seed, n, tol)


def run_all(seed: int = 0, trials: int | None = None, tol: Tolerances = DEFAULT) -> dict:
    reports = {name: run_suite(name, seed, trials, tol) for name in SUITES}
    return {"suite": "all", "seed": seed, "trials": trials,
            "passed": all(r.passed for r in reports.values()),
            "failed": [n for n, r in reports.items() if not r.passed],
            "suites": {n: r.as_dict() for n, r in reports.items()}}


__all__ = ["SUITES", "SuiteReport", "Property", "run_suite", "run_all", "jordan_start",
           "jordan_pair", "minimizer", "random_critical_point", "handsaw_restriction",
           "JORDAN_LEDGER"]
