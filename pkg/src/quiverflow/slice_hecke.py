"""Negative slices, adjacent pairs, tubular-neighbourhood ranks and Hecke data.

Throughout, an adjacent pair has v_l = v_u + e_k and an upper critical point
x_u + 0 with x_u on v_u and the zero representation on v - v_u. Elements of
the negative slice are maps from the (v - v_u) part into the v_u part.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .checks import relation_set_checks
from .config import DEFAULT, Tolerances
from .critical import framed_stable, hessian_index
from .deformation import deformation_complex, rho_matrix
from .errors import InvalidDimensionVector, NotOnFlowLine, PreconditionFailed
from .linalg import max_principal_angle, null_space, numerical_rank, range_basis
from .quiver import DimensionVector, Quiver, RelationSet, hom1_dim, rel_dim
from .rep import (GradedLinearMap, Representation, block_sum, d_nu, hom1_space,
                  rel_space, relation_blocks, relation_map)
from .stability import CentralElement, canonical_central


@dataclass
class AdjacentPair:
    quiver: Quiver
    v: DimensionVector
    v_u: DimensionVector
    k: str
    x_u: Representation
    alpha: CentralElement | None = None
    framing_vertices: tuple[str, ...] = ()

    def __post_init__(self):
        Q = self.quiver
        self.v, self.v_u = Q.dimvec(self.v), Q.dimvec(self.v_u)
        if self.k not in Q.vertices:
            raise InvalidDimensionVector(f"unknown vertex {self.k}")
        if not self.v_ell.leq(self.v):
            raise InvalidDimensionVector(f"v_l = {self.v_ell} is not bounded by v = {self.v}")
        if self.x_u.dims != self.v_u:
            raise InvalidDimensionVector("x_u must live on v_u")
        if not self.framing_vertices:
            if Q.framing is None:
                raise PreconditionFailed("pass framing_vertices for an unframed quiver")
            self.framing_vertices = (Q.framing,)
        if self.alpha is None and Q.framing is not None and self.v[Q.framing] == 1:
            self.alpha = canonical_central(Q, self.v)
        if not framed_stable(self.x_u, self.framing_vertices):
            raise PreconditionFailed("x_u is not stable")

    @property
    def e_k(self) -> DimensionVector:
        return self.quiver.basis_vector(self.k)

    @property
    def v_ell(self) -> DimensionVector:
        return self.v_u + self.e_k

    @property
    def rest(self) -> DimensionVector:
        """v - v_u, the source of the slice."""
        return self.v - self.v_u

    @property
    def kernel_dims(self) -> DimensionVector:
        return self.v - self.v_ell

    def zero_rest(self) -> Representation:
        return Representation.zero(self.quiver, self.rest)

    def upper_point(self) -> Representation:
        return block_sum(self.x_u, self.zero_rest())

    def describe(self) -> dict:
        return {"v": self.v.as_dict(), "v_u": self.v_u.as_dict(), "v_ell": self.v_ell.as_dict(),
                "k": self.k}


def negative_slice_at(x_u: Representation, R: RelationSet, v2,
                      x2: Representation | None = None,
                      tol: Tolerances = DEFAULT) -> list[GradedLinearMap]:
    """Orthonormal basis of Hom^1(Q, v2, v1) cap ker rho^* cap ker d nu.

    ``x_u`` is the block on v1; the block on v2 defaults to zero.
    """
    Q = x_u.quiver
    x2 = Representation.zero(Q, v2) if x2 is None else x2
    return deformation_complex(Q, R, x_u, x2, tol).slice_basis


def adjacent_fibre(pair: AdjacentPair, tol: Tolerances = DEFAULT) -> dict:
    Q = pair.quiver
    line = Representation.zero(Q, pair.e_k)
    P = rho_matrix(pair.x_u, line)
    info = numerical_rank(P, tol.rank_rtol, 1.0 + pair.x_u.norm())
    dim = P.shape[0] - info.rank
    return {"coker_dim": dim, "hom1_dim": P.shape[0], "rank": info.rank, "margin": info.margin,
            "fibre": f"C^{dim} minus the origin" if dim else "empty",
            "circle_weight": 1}


# --- flow-line points --------------------------------------------------------

def slice_kernel(pair: AdjacentPair, dx: GradedLinearMap,
                 tol: Tolerances = DEFAULT) -> tuple[dict, DimensionVector, float]:
    """Per-vertex kernel of dx (intersection over edges leaving the vertex)."""
    Q = pair.quiver
    ker, margin = {}, np.inf
    scale = 1.0 + dx.norm()
    for j in Q.vertices:
        mats = [dx.blocks[e.id] for e in Q.out_edges(j)]
        n = pair.rest[j]
        M = np.vstack(mats) if mats else np.zeros((0, n))
        N, info = null_space(M, tol.rank_rtol, scale)
        ker[j] = N
        margin = min(margin, info.margin)
    return ker, Q.dimvec({j: ker[j].shape[1] for j in Q.vertices}), margin


def sample_flow_line_point(pair: AdjacentPair, rng: np.random.Generator, scale: float = 1.0,
                           tol: Tolerances = DEFAULT) -> GradedLinearMap:
    """Random slice element whose kernel has dimension vector v - v_l.

    Edges leaving vertices other than k are cleared and the stacked block at k
    is truncated to rank one; both operations preserve the slice.
    """
    Q = pair.quiver
    basis = negative_slice_at(pair.x_u, RelationSet(()), pair.rest, tol=tol)
    if not basis:
        raise NotOnFlowLine("the negative slice is zero")
    c = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
    y = sum((ci * b for ci, b in zip(c, basis[1:])), c[0] * basis[0])
    blocks = {e.id: np.array(y.blocks[e.id]) for e in Q.edges}
    for e in Q.edges:
        if e.tail != pair.k:
            blocks[e.id][:] = 0
    out = [e for e in Q.out_edges(pair.k)]
    if out:
        M = np.vstack([blocks[e.id] for e in out])
        u, s, vh = np.linalg.svd(M)
        if s.size == 0 or s[0] <= 1e-6 * (1.0 + np.linalg.norm(M)):
            raise NotOnFlowLine("slice element vanishes at the split vertex")
        M1 = s[0] * np.outer(u[:, 0], vh[0])
        r = 0
        for e in out:
            h = blocks[e.id].shape[0]
            blocks[e.id] = M1[r:r + h]
            r += h
    dx = GradedLinearMap(Q, pair.rest, pair.v_u, blocks)
    return dx * (scale / max(dx.norm(), 1e-300))


@dataclass
class BundleRanks:
    rank_D: int
    rank_V: int
    rank_T: int
    nu: int
    lambda_u: int | None
    codim_numeric: int
    margins: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"rank_D": self.rank_D, "rank_V": self.rank_V, "rank_T": self.rank_T,
                "nu": self.nu, "lambda_u": self.lambda_u, "codim_numeric": self.codim_numeric,
                "margins": self.margins}


def _split_at_line(pair: AdjacentPair, dx: GradedLinearMap, ker: dict):
    """Orthonormal kernel bases, the complementary line at k and y = dx on it."""
    Q = pair.quiver
    Kb = ker
    Lk = null_space(Kb[pair.k].conj().T)[0] if Kb[pair.k].shape[1] else np.eye(pair.rest[pair.k])
    y = {}
    for e in Q.edges:
        if e.tail == pair.k:
            y[e.id] = dx.blocks[e.id] @ Lk
        else:
            y[e.id] = np.zeros((pair.v_u[e.head], pair.e_k[e.tail]), dtype=complex)
    return Lk, GradedLinearMap(Q, pair.e_k, pair.v_u, y)


def _hom0_to(pair: AdjacentPair, tgt: DimensionVector) -> int:
    return sum(pair.kernel_dims[j] * tgt[j] for j in pair.quiver.vertices)


def bundle_ranks(pair: AdjacentPair, dx: GradedLinearMap, tol: Tolerances = DEFAULT,
                 with_index: bool = True) -> BundleRanks:
    Q = pair.quiver
    ker, kd, kmargin = slice_kernel(pair, dx, tol)
    if kd != pair.kernel_dims:
        raise NotOnFlowLine(f"kernel has dimension vector {kd}, expected {pair.kernel_dims}")
    Kd = pair.kernel_dims
    _, y = _split_at_line(pair, dx, ker)
    xu = pair.x_u
    scale = 1.0 + xu.norm() + dx.norm()

    # D: Hom^0(K, v_u) + Hom^0(K, e_k) -> Hom^1(K, v_u), (u1, u2) -> -x_u u1 + y u2
    dom1 = [(j, pair.v_u[j], Kd[j]) for j in Q.vertices]
    dom2 = [(j, pair.e_k[j], Kd[j]) for j in Q.vertices]
    cod = hom1_space(Q, Kd, pair.v_u)

    def col_maps(dom, act):
        cols = []
        for j, r, c in dom:
            for idx in range(r * c):
                u = {jj: np.zeros((rr, cc), dtype=complex) for jj, rr, cc in dom}
                u[j].reshape(-1)[idx] = 1.0
                cols.append(cod.pack({e.id: act(e, u) for e in Q.edges}))
        return cols

    c1 = col_maps(dom1, lambda e, u: -xu.blocks[e.id] @ u[e.tail])
    c2 = col_maps(dom2, lambda e, u: y.blocks[e.id] @ u[e.tail])
    MD = np.column_stack(c1 + c2) if c1 + c2 else np.zeros((cod.dim, 0))
    iD = numerical_rank(MD, tol.rank_rtol, scale)
    rank_D = 2 * (cod.dim - iD.rank)

    # V: the full map u -> -X u into Hom^1(K, v_l) with X = [[x_u, y], [0, 0]]
    X = block_sum(xu, Representation.zero(Q, pair.e_k), y)
    codV = hom1_space(Q, Kd, pair.v_ell)
    domV = [(j, pair.v_ell[j], Kd[j]) for j in Q.vertices]
    colsV = []
    for j, r, c in domV:
        for idx in range(r * c):
            u = {jj: np.zeros((rr, cc), dtype=complex) for jj, rr, cc in domV}
            u[j].reshape(-1)[idx] = 1.0
            colsV.append(codV.pack({e.id: -X.blocks[e.id] @ u[e.tail] for e in Q.edges}))
    MV = np.column_stack(colsV) if colsV else np.zeros((codV.dim, 0))
    iV = numerical_rank(MV, tol.rank_rtol, scale)
    rank_V = 2 * (codV.dim - iV.rank)

    rank_T = 2 * hom1_dim(Q, Kd, pair.e_k)
    codim, cmargin = flow_line_codim(pair, dx, ker, tol)
    lam = None
    if with_index and pair.alpha is not None:
        lam = hessian_index(pair.upper_point(), pair.alpha, tol).index
    return BundleRanks(rank_D, rank_V, rank_T, rank_D, lam, codim,
                       {"kernel": kmargin, "D": iD.margin, "V": iV.margin, "codim": cmargin})


def flow_line_codim(pair: AdjacentPair, dx: GradedLinearMap, ker: dict,
                    tol: Tolerances = DEFAULT) -> tuple[int, float]:
    """Real codimension of {kernel dims = v - v_l} inside the slice at dx.

    Near dx the stratum is parametrised by (y', phi) -> y' phi^* with y' in the
    slice over the line and phi a functional on the k-th source space.
    """
    Q = pair.quiver
    S = negative_slice_at(pair.x_u, RelationSet(()), pair.rest, tol=tol)
    SL = negative_slice_at(pair.x_u, RelationSet(()), pair.e_k, tol=tol)
    Lk, y = _split_at_line(pair, dx, ker)
    phi = Lk[:, 0]
    space = hom1_space(Q, pair.rest, pair.v_u)

    def outer(yv: GradedLinearMap, f: np.ndarray) -> np.ndarray:
        blocks = {}
        for e in Q.edges:
            if e.tail == pair.k:
                blocks[e.id] = yv.blocks[e.id] @ f.conj()[None, :]
            else:
                blocks[e.id] = np.zeros(space.shapes[space.keys.index(e.id)], dtype=complex)
        return space.pack(blocks)

    cols = [outer(b, phi) for b in SL]
    n = pair.rest[pair.k]
    for i in range(n):
        f = np.zeros(n, dtype=complex)
        f[i] = 1.0
        cols.append(outer(y, f))
    J = np.column_stack(cols) if cols else np.zeros((space.dim, 0))
    info = numerical_rank(J, tol.rank_rtol, 1.0 + dx.norm())
    return 2 * (len(S) - info.rank), info.margin


# --- Euler data ----------------------------------------------------------------

@dataclass
class EulerData:
    n: int
    degree: int
    weight_record: list[dict]

    def as_dict(self) -> dict:
        return {"n": self.n, "degree": self.degree, "weights": self.weight_record}


def euler_data(pair: AdjacentPair) -> EulerData:
    Q, Kd = pair.quiver, pair.kernel_dims
    rec = []
    for e in Q.in_edges(pair.k):
        m = Kd[e.tail]
        if m:
            rec.append({"edge": e.id, "shape": [1, m], "circle_weight": 1,
                        "rest_factor": f"dual standard of U({m}) at {e.tail}"})
    n = hom1_dim(Q, Kd, pair.e_k)
    assert n == sum(r["shape"][1] for r in rec)
    return EulerData(n, 2 * n, rec)


# --- Hecke correspondence ---------------------------------------------------------

@dataclass
class HeckeReport:
    membership: dict
    ranks: dict
    d: int
    margins: dict
    loop_condition: bool
    angle: float | None = None

    def as_dict(self) -> dict:
        return {"membership": self.membership, "ranks": self.ranks, "d": self.d,
                "margins": self.margins, "loop_condition": self.loop_condition,
                "normal_angle": self.angle}


def _hecke_maps(x_u: Representation, y: GradedLinearMap, R: RelationSet):
    """Matrices on Hom^1(v_u, v_u) + Hom^1(e_k, v_u) of
    A = d nu_{x_u} on the first summand (into Rel(v_u, v_u)) and
    N = (dx, dy) -> 12-block of d nu at [[x_u, y], [0, 0]] (into Rel(e_k, v_u))."""
    Q = x_u.quiver
    vu, ek = x_u.dims, y.src
    line = Representation.zero(Q, ek)
    X = block_sum(x_u, line, y)
    s11 = hom1_space(Q, vu, vu)
    s12 = hom1_space(Q, ek, vu)
    n11, n12 = s11.dim, s12.dim
    r11 = rel_space(R, vu, vu)
    r12 = rel_space(R, ek, vu)

    def lift(vec):
        b11 = s11.unpack(vec[:n11])
        b12 = s12.unpack(vec[n11:])
        return block_sum(Representation(Q, vu, b11), line, GradedLinearMap(Q, ek, vu, b12)).as_map()

    A = np.zeros((r11.dim, n11 + n12), dtype=complex)
    N = np.zeros((r12.dim, n11 + n12), dtype=complex)
    for i in range(n11 + n12):
        e = np.zeros(n11 + n12, dtype=complex)
        e[i] = 1.0
        val = d_nu(X, X, R, lift(e))
        parts = relation_blocks(val, vu, ek)
        N[:, i] = r12.pack(parts["12"])
        if i < n11:
            A[:, i] = r11.pack(parts["11"])
    return A, N, n11, n12


def _trace_free_rows(R: RelationSet, vu: DimensionVector) -> np.ndarray:
    """Orthonormal basis (columns) of Rel_0(v_u, v_u) inside Rel(v_u, v_u)."""
    sp = rel_space(R, vu, vu)
    t = np.zeros(sp.dim, dtype=complex)
    for r, (rows, cols), o in zip(R, sp.shapes, sp.offsets):
        if r.tail == r.head and rows:
            t[o:o + rows * cols] = np.eye(rows).reshape(-1)
    if not np.any(t):
        return np.eye(sp.dim, dtype=complex)
    return null_space(t[None, :].conj())[0]


def hecke_tangent_report(pair: AdjacentPair, R: RelationSet, y: GradedLinearMap,
                         tol: Tolerances = DEFAULT) -> HeckeReport:
    """Membership flags, tangent ranks and Thom codimension at (x_u, y).

    Here v = v_l: y is a map from the line e_k into the v_u part.
    """
    Q, x_u = pair.quiver, pair.x_u
    if y.norm() == 0:
        raise PreconditionFailed("y must be nonzero")
    if y.src != pair.e_k or y.tgt != pair.v_u:
        raise InvalidDimensionVector("y must lie in Hom^1(Q, e_k, v_u)")
    checks = relation_set_checks(Q, R)
    scale = 1.0 + x_u.norm() + y.norm()
    mtol = tol.member_tol * scale ** 2

    line = Representation.zero(Q, pair.e_k)
    in_T = relation_map(x_u, R).norm() <= mtol
    in_N = d_nu(x_u, line, R, y).norm() <= mtol
    flags = {"F": True, "N": bool(in_N), "T": bool(in_T), "B": bool(in_N and in_T)}

    A, N, n11, n12 = _hecke_maps(x_u, y, R)
    d_formula = 2 * rel_dim(Q, R, pair.e_k, pair.v_u)
    # N in F: rank of (dx, dy) -> dnu_{x_u}(dy) + dnu_y(dx)
    iN = numerical_rank(N, tol.rank_rtol, scale)
    # B in F: (dnu_{x_u}(dx) projected to Rel_0, N)
    P0 = _trace_free_rows(R, pair.v_u)
    iB = numerical_rank(np.vstack([P0.conj().T @ A, N]), tol.rank_rtol, scale)
    # B in T: N restricted to ker dnu_{x_u} on the first summand
    TA, _ = null_space(A[:, :n11], tol.rank_rtol, scale)
    Tb = np.zeros((n11 + n12, TA.shape[1] + n12), dtype=complex)
    Tb[:n11, :TA.shape[1]] = TA
    Tb[n11:, TA.shape[1]:] = np.eye(n12)
    NT = N @ Tb
    iBT = numerical_rank(NT, tol.rank_rtol, scale)

    # normal of B in T two ways: complement of ker(N|T) inside T, and P_T(im N^*)
    kerNT, _ = null_space(NT, tol.rank_rtol, scale)
    comp = null_space(kerNT.conj().T)[0] if kerNT.shape[1] else np.eye(Tb.shape[1])
    normal_a = Tb @ comp
    proj = Tb @ (Tb.conj().T @ N.conj().T)
    normal_b, _ = range_basis(proj, tol.rank_rtol)
    angle = max_principal_angle(normal_a, normal_b)

    tilde = tilde_N_rank(x_u, y, R, tol)
    ranks = {"N_in_F": 2 * iN.rank, "B_in_F": 2 * iB.rank, "B_in_T": 2 * iBT.rank,
             "tilde_N": tilde["rank"], "adjoint_rank": 2 * iN.rank, "d_formula": d_formula}
    margins = {"N_in_F": iN.margin, "B_in_F": iB.margin, "B_in_T": iBT.margin,
               "tilde_N": tilde["margin"]}
    return HeckeReport(flags, ranks, d_formula, margins, checks.loop_condition, angle)


def _project_kernel_rho_star(x_u: Representation, y: GradedLinearMap) -> GradedLinearMap:
    """Component of y in ker(rho_{x_u})^* inside Hom^1(e_k, v_u)."""
    Q = x_u.quiver
    line = Representation.zero(Q, y.src)
    P = rho_matrix(x_u, line)
    B, _ = range_basis(P)
    v = y.vector()
    return GradedLinearMap.from_vector(Q, y.src, y.tgt, v - B @ (B.conj().T @ v))


def tilde_N_rank(x_u: Representation, y: GradedLinearMap, R: RelationSet,
                 tol: Tolerances = DEFAULT, h: float = 1e-6) -> dict:
    """Real rank of the derivative of (x, Pi) -> nu_12(x_u, y_h) at (x_u + y, Pi_0).

    Pi varies through exp of an anti-Hermitian generator mixing the line at k
    with the v_u part; x varies over all of Rep(Q, v_l).
    """
    Q = x_u.quiver
    vu, ek = x_u.dims, y.src
    vl = vu + ek
    k = next(j for j in Q.vertices if ek[j])
    X0 = block_sum(x_u, Representation.zero(Q, ek), y)
    sp = hom1_space(Q, vl, vl)
    r12 = rel_space(R, ek, vu)
    nW = vu[k]

    def phi(dX: np.ndarray, W: np.ndarray) -> np.ndarray:
        X = Representation.from_vector(Q, vl, X0.vector() + dX)
        g = {}
        for j in Q.vertices:
            Z = np.zeros((vl[j], vl[j]), dtype=complex)
            if j == k and nW:
                Z[vu[j]:, :vu[j]] = W[None, :]
                Z[:vu[j], vu[j]:] = -W.conj()[:, None]
            g[j] = expm(Z)
        Xr = {e.id: g[e.head].conj().T @ X.blocks[e.id] @ g[e.tail] for e in Q.edges}
        xu = Representation(Q, vu, {e.id: Xr[e.id][:vu[e.head], :vu[e.tail]] for e in Q.edges})
        yy = GradedLinearMap(Q, ek, vu, {e.id: Xr[e.id][:vu[e.head], vu[e.tail]:] for e in Q.edges})
        yh = _project_kernel_rho_star(xu, yy)
        val = relation_blocks(relation_map(block_sum(xu, Representation.zero(Q, ek), yh), R), vu, ek)
        out = r12.pack(val["12"])
        return np.concatenate([out.real, out.imag])

    n = sp.dim
    base_W = np.zeros(nW, dtype=complex)
    cols = []
    for j in range(2 * n):
        e = np.zeros(n, dtype=complex)
        e[j % n] = h if j < n else 1j * h
        cols.append((phi(e, base_W) - phi(-e, base_W)) / (2 * h))
    for j in range(2 * nW):
        w = np.zeros(nW, dtype=complex)
        w[j % nW] = h if j < nW else 1j * h
        cols.append((phi(np.zeros(n), w) - phi(np.zeros(n), -w)) / (2 * h))
    J = np.column_stack(cols) if cols else np.zeros((2 * r12.dim, 0))
    info = numerical_rank(J, tol.fd_rank_rtol, 1.0 + X0.norm())
    return {"rank": info.rank, "margin": info.margin}


__all__ = ["AdjacentPair", "BundleRanks", "EulerData", "HeckeReport", "negative_slice_at",
           "adjacent_fibre", "bundle_ranks", "euler_data", "hecke_tangent_report",
           "sample_flow_line_point", "slice_kernel", "flow_line_codim", "tilde_N_rank"]
