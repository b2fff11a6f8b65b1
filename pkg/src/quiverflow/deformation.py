"""Deformation complex Hom^0 -> Hom^1 -> Rel at a pair (x1, x2) and related ranks."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .checks import relation_set_checks
from .config import DEFAULT, Tolerances
from .errors import NumericalStall, PreconditionFailed
from .linalg import null_space, numerical_rank
from .quiver import Quiver, RelationSet, dims_and_forms
from .rep import (GradedLinearMap, LieAlgebraElement, Representation, assemble,
                  d_nu, hom0_space, hom1_space, inf_action, rel_space, relation_map)


def rho_matrix(x1: Representation, x2: Representation) -> np.ndarray:
    """Matrix of rho^C: Hom^0(Q, v2, v1) -> Hom^1(Q, v2, v1)."""
    Q = x1.quiver
    dom = hom0_space(Q, x2.dims, x1.dims)
    cod = hom1_space(Q, x2.dims, x1.dims)
    return assemble(lambda b: inf_action(x1, LieAlgebraElement(Q, x2.dims, x1.dims, b), x2).blocks,
                    dom, cod)


def dnu_matrix(x1: Representation, x2: Representation, R: RelationSet) -> np.ndarray:
    """Matrix of d nu: Hom^1(Q, v2, v1) -> Rel(Q, v2, v1, R)."""
    Q = x1.quiver
    dom = hom1_space(Q, x2.dims, x1.dims)
    cod = rel_space(R, x2.dims, x1.dims)
    return assemble(lambda b: d_nu(x1, x2, R, GradedLinearMap(Q, x2.dims, x1.dims, b)).blocks,
                    dom, cod)


@dataclass
class DeformationReport:
    h0: int
    h1: int
    h2: int
    slice_basis: list[GradedLinearMap] = field(repr=False)
    singular_value_margins: dict = field(default_factory=dict)
    ringel_R: int = 0

    @property
    def euler_char(self) -> int:
        return self.h0 - self.h1 + self.h2

    @property
    def min_margin(self) -> float:
        return min(self.singular_value_margins.values(), default=np.inf)

    def as_dict(self) -> dict:
        return {"h0": self.h0, "h1": self.h1, "h2": self.h2, "ringel_R": self.ringel_R,
                "margins": self.singular_value_margins}


def deformation_complex(Q: Quiver, R: RelationSet, x1: Representation, x2: Representation,
                        tol: Tolerances = DEFAULT) -> DeformationReport:
    P = rho_matrix(x1, x2)
    D = dnu_matrix(x1, x2, R)
    n0, n2 = P.shape[1], D.shape[0]
    # margins are measured against the size of the operands as well
    scale = 1.0 + x1.norm() + x2.norm()
    rp = numerical_rank(P, tol.rank_rtol, scale)
    rd = numerical_rank(D, tol.rank_rtol, scale)
    # S^- = ker rho^* cap ker dnu, the null space of [rho^*; dnu]
    N, rs = null_space(np.vstack([P.conj().T, D]), tol.rank_rtol, scale)
    basis = [GradedLinearMap.from_vector(Q, x2.dims, x1.dims, N[:, j]) for j in range(N.shape[1])]
    f = dims_and_forms(Q, R, x1.dims, x2.dims)
    return DeformationReport(n0 - rp.rank, N.shape[1], n2 - rd.rank, basis,
                             {"rho": rp.margin, "dnu": rd.margin, "slice": rs.margin}, f.ringel_R)


def negative_slice_basis(x1: Representation, x2: Representation, R: RelationSet,
                         tol: Tolerances = DEFAULT) -> list[GradedLinearMap]:
    return deformation_complex(x1.quiver, R, x1, x2, tol).slice_basis


@dataclass(frozen=True)
class CokernelCheck:
    numeric: int
    formula: int
    per_vertex: dict
    margin: float

    def as_dict(self) -> dict:
        return {"numeric": self.numeric, "formula": self.formula,
                "per_vertex": self.per_vertex, "margin": self.margin}


def image_deficits(x1: Representation, rtol: float | None = None) -> dict[str, int]:
    """r_k = v1_k - dim(sum of the images of all x1_a with h(a) = k)."""
    Q, v = x1.quiver, x1.dims
    out = {}
    for k in Q.vertices:
        mats = [x1.blocks[e.id] for e in Q.in_edges(k)]
        if v[k] == 0:
            out[k] = 0
            continue
        M = np.hstack(mats) if mats else np.zeros((v[k], 0))
        out[k] = v[k] - numerical_rank(M, rtol).rank
    return out


def coker_dnu_check(Q: Quiver, R: RelationSet, x1: Representation, v2,
                    tol: Tolerances = DEFAULT) -> CokernelCheck:
    checks = relation_set_checks(Q, R)
    if not (checks.quadratic and checks.complete):
        raise PreconditionFailed("cokernel formula needs complete quadratic relations")
    v2 = Q.dimvec(v2)
    x2 = Representation.zero(Q, v2)
    D = dnu_matrix(x1, x2, R)
    info = numerical_rank(D, tol.rank_rtol, 1.0 + x1.norm())
    numeric = D.shape[0] - info.rank
    r = image_deficits(x1, tol.rank_rtol)
    formula = sum(v2[rel.tail] * r[rel.head] for rel in R)
    return CokernelCheck(numeric, formula, r, info.margin)


def trace_free_rank(R: RelationSet, x1: Representation, x2: Representation) -> int:
    """Dimension of Rel_0: one trace condition per loop relation when v1 = v2."""
    n = rel_space(R, x2.dims, x1.dims).dim
    if x1.dims != x2.dims:
        return n
    loops = [r for r in R if r.tail == r.head and x1.dims[r.tail] > 0]
    return n - (1 if loops else 0)


def project_to_relations(x: Representation, R: RelationSet, tol: float = 1e-13,
                         max_iter: int = 50) -> Representation:
    """Gauss-Newton projection onto nu^{-1}(0): x <- x - J^+ nu(x)."""
    Q, v = x.quiver, x.dims
    y = x.vector()
    for _ in range(max_iter):
        cur = Representation.from_vector(Q, v, y)
        r = relation_map(cur, R).vector()
        if np.linalg.norm(r) <= tol * (1.0 + np.linalg.norm(y)):
            return cur
        J = dnu_matrix(cur, cur, R)
        y = y - np.linalg.lstsq(J, r, rcond=None)[0]
    raise NumericalStall("projection onto the relation locus did not converge")


def relation_residual(x: Representation, R: RelationSet) -> float:
    return relation_map(x, R).norm() if len(R) else 0.0


__all__ = ["DeformationReport", "CokernelCheck", "deformation_complex", "negative_slice_basis",
           "coker_dnu_check", "image_deficits", "rho_matrix", "dnu_matrix", "trace_free_rank",
           "project_to_relations", "relation_residual"]
