"""Integer degree and rank record for one adjacent pair."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .checks import relation_set_checks
from .config import DEFAULT, Tolerances, rng_for
from .critical import CriticalClassification, HessianIndex, framed_stable, hessian_index
from .errors import NotOnFlowLine, PreconditionFailed, UnstableLedger
from .jsonio import dump_json
from .linalg import numerical_rank
from .quiver import DimensionVector, RelationSet, rel_dim
from .rep import GradedLinearMap, Representation, block_sum, group_action, random_unitary
from .slice_hecke import (AdjacentPair, _hecke_maps, bundle_ranks, euler_data,
                          sample_flow_line_point)
from .stability import CentralElement, induced_central

CHERN_DEGREE = 2


@dataclass
class ConvolutionLedger:
    v: DimensionVector
    v_u: DimensionVector
    v_ell: DimensionVector
    k: str
    lambda_u: int
    nu: int
    euler_degree: int
    d: int
    grassmannian_dim: int
    eta_degree: int = 0
    chern_degree: int = CHERN_DEGREE
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("lambda_u", "nu", "euler_degree", "d"):
            val = getattr(self, name)
            if val < 0 or val % 2:
                raise UnstableLedger(f"{name} = {val} must be even and non-negative",
                                     self.provenance.get("margins"))

    @property
    def shift(self) -> int:
        return self.d - self.lambda_u

    @property
    def total_shift(self) -> int:
        """Shift including a caller-supplied class of degree eta_degree."""
        return self.shift + self.eta_degree

    def summary(self) -> dict:
        return {"lambda_u": self.lambda_u, "nu": self.nu, "euler_degree": self.euler_degree,
                "d": self.d, "shift": self.shift, "grassmannian_dim": self.grassmannian_dim}

    def as_dict(self) -> dict:
        out = self.summary()
        out.update({"v": self.v.as_dict(), "v_u": self.v_u.as_dict(),
                    "v_ell": self.v_ell.as_dict(), "k": self.k,
                    "chern_degree": self.chern_degree, "eta_degree": self.eta_degree,
                    "total_shift": self.total_shift, "provenance": self.provenance})
        return out

    def to_json(self) -> str:
        return dump_json(self.as_dict())


def _majority(name: str, values: list[int], margins: dict) -> int:
    if not values:
        raise UnstableLedger(f"no usable samples for {name}", margins)
    (val, n), *_ = Counter(values).most_common()
    if 2 * n <= len(values):
        raise UnstableLedger(f"no strict majority for {name}: {sorted(values)}", margins)
    return val


def _rotate(x: Representation, rng: np.random.Generator) -> Representation:
    g = {k: random_unitary(x.dims[k], rng) for k in x.quiver.vertices}
    return group_action(g, x)


def adjoint_rank_at(pair: AdjacentPair, R: RelationSet, y: GradedLinearMap,
                    tol: Tolerances = DEFAULT) -> tuple[int, float]:
    """Real rank of (dnu_{x_u} + dnu_y)^* and its margin."""
    _, N, _, _ = _hecke_maps(pair.x_u, y, R)
    info = numerical_rank(N.conj().T, tol.rank_rtol, 1.0 + pair.x_u.norm() + y.norm())
    return 2 * info.rank, info.margin


def build_ledger(pair: AdjacentPair, R: RelationSet, samples: int = 5, seed: int = 0,
                 eta_degree: int = 0, tol: Tolerances = DEFAULT,
                 max_tries: int = 20) -> ConvolutionLedger:
    Q = pair.quiver
    if samples < 1:
        raise PreconditionFailed("samples must be at least 1")
    if not relation_set_checks(Q, R).complete:
        raise PreconditionFailed("relation set is not complete")
    if pair.alpha is None:
        raise PreconditionFailed("the pair carries no central element")

    lam, nus, d_num = [], [], []
    margins = {"hessian": [], "flow_line": [], "adjoint": []}
    for s in range(samples):
        rng = rng_for(seed, "ledger", s)
        xu = _rotate(pair.x_u, rng)
        p = AdjacentPair(Q, pair.v, pair.v_u, pair.k, xu, pair.alpha, pair.framing_vertices)
        hi: HessianIndex = hessian_index(p.upper_point(), p.alpha, tol)
        lam.append(hi.index)
        margins["hessian"].append(hi.eigen_margin)

        for _ in range(max_tries):
            try:
                dx = sample_flow_line_point(p, rng, tol=tol)
                br = bundle_ranks(p, dx, tol, with_index=False)
            except NotOnFlowLine:
                continue
            if br.nu != br.codim_numeric:
                raise UnstableLedger("bundle rank and measured codimension disagree",
                                     {"rank_D": br.rank_D, "codim": br.codim_numeric, **br.margins})
            nus.append(br.nu)
            margins["flow_line"].append(min(br.margins.values()))
            break

        for _ in range(max_tries):
            y = GradedLinearMap.random(Q, p.e_k, p.v_u, rng)
            X = block_sum(xu, Representation.zero(Q, p.e_k), y)
            if framed_stable(X, p.framing_vertices):
                r, m = adjoint_rank_at(p, R, y, tol)
                d_num.append(r)
                margins["adjoint"].append(m)
                break

    d_formula = 2 * rel_dim(Q, R, pair.e_k, pair.v_u)
    dump = {"lambda_u": lam, "nu": nus, "d_numeric": d_num, **margins}
    lambda_u = _majority("lambda_u", lam, dump)
    nu = _majority("nu", nus, dump)
    e = euler_data(pair)
    grass = sum(pair.v_u[j] * (pair.v_ell[j] - pair.v_u[j]) for j in Q.vertices)
    prov = {"seed": int(seed), "samples": int(samples),
            "d_numeric": d_num, "d_matches_formula": all(r == d_formula for r in d_num),
            "margins": {k: [float(x) for x in v] for k, v in margins.items()},
            "alpha": pair.alpha.as_dict()}
    return ConvolutionLedger(pair.v, pair.v_u, pair.v_ell, pair.k, lambda_u, nu, e.degree,
                             d_formula, grass, eta_degree, CHERN_DEGREE, prov)


@dataclass(frozen=True)
class CriticalFactorization:
    blocks: tuple[tuple[DimensionVector, CentralElement], ...]

    def as_dict(self) -> dict:
        return {"blocks": [{"v": v.as_dict(), "alpha": a.as_dict()} for v, a in self.blocks]}


def critical_factorization(cls: CriticalClassification,
                           alpha: CentralElement) -> CriticalFactorization:
    blocks = cls.hn.blocks
    total = cls.hn.total()
    out = []
    for b in blocks:
        a = induced_central(alpha, total, b)
        assert a.is_admissible(b)
        out.append((b, a))
    return CriticalFactorization(tuple(out))


__all__ = ["ConvolutionLedger", "CriticalFactorization", "build_ledger",
           "critical_factorization", "adjoint_rank_at", "CHERN_DEGREE"]
