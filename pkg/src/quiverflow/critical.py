"""Critical points of the energy: slope splitting, HN types, stability, index.

At a critical point H_k = M_k / 2 + alpha_k is diagonalisable in a basis
adapted to a splitting x = sum x_l, and on block l it acts as the scalar
slope_alpha(v_l). Clustering the eigenvalues of H therefore recovers the
dimension vectors of the blocks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import DegenerateSpectrum, InvalidFraming, NotCritical, PreconditionFailed
from .flow import FlowSystem
from .linalg import null_space
from .quiver import DimensionVector
from .rep import LieAlgebraElement, Representation, moment_map
from .stability import CentralElement, induced_central, slope


@dataclass(frozen=True)
class HNType:
    blocks: tuple[DimensionVector, ...]
    slopes: tuple[Fraction, ...]

    def __post_init__(self):
        if any(b >= a for a, b in zip(self.slopes[1:], self.slopes)):
            raise ValueError(f"slopes must increase strictly: {self.slopes}")

    @property
    def label(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b.as_tuple() for b in self.blocks)

    def total(self) -> DimensionVector:
        out = self.blocks[0]
        for b in self.blocks[1:]:
            out = out + b
        return out

    def as_dict(self) -> dict:
        return {"blocks": [b.as_dict() for b in self.blocks],
                "slopes": [str(s) for s in self.slopes]}

    def __repr__(self):
        return "HNType[" + ", ".join(repr(b) for b in self.blocks) + "]"


@dataclass
class CriticalClassification:
    hn: HNType
    beta: LieAlgebraElement
    residuals: list[float]
    off_block: float
    eigen_margin: float
    class_tol: float
    bases: dict = field(default_factory=dict, repr=False)

    def as_dict(self) -> dict:
        return {"hn": self.hn.as_dict(), "residuals": self.residuals,
                "off_block": self.off_block, "eigen_margin": self.eigen_margin,
                "class_tol": self.class_tol}


def _require_critical(sys: FlowSystem, y: np.ndarray, tol: float):
    g = float(np.linalg.norm(sys.grad(y)))
    if g > tol:
        raise NotCritical(f"|grad f| = {g:.3e} exceeds {tol:.1e}")
    return g


def classify_critical(x: Representation, alpha: CentralElement,
                      tol: Tolerances = DEFAULT) -> CriticalClassification:
    Q, v = x.quiver, x.dims
    sys = FlowSystem(Q, v, alpha)
    y = x.vector()
    _require_critical(sys, y, tol.grad_tol)
    Hs = sys.H(y)
    beta = LieAlgebraElement(Q, v, v, {k: -1j * h for k, h in zip(Q.vertices, Hs)})
    ctol = tol.class_rel * (1.0 + beta.norm())

    evals, evecs = {}, {}
    pool = []
    for k, h in zip(Q.vertices, Hs):
        w, U = np.linalg.eigh((h + h.conj().T) / 2)
        evals[k], evecs[k] = w, U
        pool += [(float(e), k, i) for i, e in enumerate(w)]
    pool.sort()

    # split wherever consecutive eigenvalues differ by more than ctol; a gap
    # that is neither tiny nor clearly open is reported, not guessed
    clusters, margin = [], np.inf
    for item in pool:
        if clusters and item[0] - clusters[-1][-1][0] <= ctol:
            clusters[-1].append(item)
            continue
        if clusters:
            gap = item[0] - clusters[-1][-1][0]
            margin = min(margin, gap / ctol)
            if gap < tol.class_margin * ctol:
                raise DegenerateSpectrum("eigenvalue gap too close to the clustering tolerance",
                                         {"gap": gap, "class_tol": ctol})
        clusters.append([item])

    blocks, slopes, idx = [], [], []
    for cl in clusters:
        counts = {k: 0 for k in Q.vertices}
        for _, k, _ in cl:
            counts[k] += 1
        d = Q.dimvec(counts)
        blocks.append(d)
        slopes.append(slope(alpha, d))
        idx.append({k: [i for _, kk, i in cl if kk == k] for k in Q.vertices})
    if len(set(slopes)) != len(slopes):
        raise DegenerateSpectrum("distinct eigenvalue clusters carry equal slopes",
                                 {"slopes": [str(s) for s in slopes]})

    off = 0.0
    for e in Q.edges:
        Uh, Ut = evecs[e.head], evecs[e.tail]
        xb = Uh.conj().T @ x.blocks[e.id] @ Ut
        mask = np.ones(xb.shape, dtype=bool)
        for part in idx:
            mask[np.ix_(part[e.head], part[e.tail])] = False
        if mask.any():
            off = max(off, float(np.max(np.abs(xb[mask]))))
    if off > ctol:
        raise DegenerateSpectrum("x is not block diagonal in the eigenbasis of beta",
                                 {"off_block": off, "class_tol": ctol})

    residuals = []
    bases = {}
    for d, part in zip(blocks, idx):
        sub = {k: evecs[k][:, part[k]] for k in Q.vertices}
        xl = Representation(Q, d, {e.id: sub[e.head].conj().T @ x.blocks[e.id] @ sub[e.tail]
                                   for e in Q.edges})
        al = induced_central(alpha, v, d)
        mu = moment_map(xl)
        target = LieAlgebraElement.scalar(Q, d, {k: 1j * float(al[k]) for k in Q.vertices})
        residuals.append((mu - target).norm())
        bases[d.as_tuple()] = sub

    order = sorted(range(len(blocks)), key=lambda i: slopes[i])
    hn = HNType(tuple(blocks[i] for i in order), tuple(slopes[i] for i in order))
    return CriticalClassification(hn, beta, [residuals[i] for i in order], off,
                                  float(margin), ctol, bases)


def max_subrep_avoiding(x: Representation, avoid, rtol: float | None = None) -> dict[str, np.ndarray]:
    """Largest subrepresentation W with W_k = 0 for k in ``avoid``.

    Decreasing iteration W_t(a) <- W_t(a) cap x_a^{-1}(W_h(a)); returns an
    orthonormal basis per vertex.
    """
    Q, v = x.quiver, x.dims
    avoid = set(avoid)
    W = {k: np.zeros((v[k], 0), dtype=complex) if k in avoid else np.eye(v[k], dtype=complex)
         for k in Q.vertices}
    for _ in range(v.total + 1):
        changed = False
        for e in Q.edges:
            Wt, Wh = W[e.tail], W[e.head]
            if Wt.shape[1] == 0:
                continue
            # component of x_a W_t outside W_h must vanish
            P = np.eye(v[e.head], dtype=complex) - Wh @ Wh.conj().T
            N, _ = null_space(P @ x.blocks[e.id] @ Wt, rtol)
            if N.shape[1] < Wt.shape[1]:
                W[e.tail] = Wt @ N
                changed = True
        if not changed:
            break
    return W


def hn_type_algebraic(x: Representation, alpha: CentralElement,
                      rtol: float | None = None) -> HNType:
    """Two-step type from the maximal subrepresentation avoiding the framing."""
    Q, v = x.quiver, x.dims
    if Q.framing is None:
        raise InvalidFraming("quiver has no framing vertex")
    W = max_subrep_avoiding(x, [Q.framing], rtol)
    w = Q.dimvec({k: W[k].shape[1] for k in Q.vertices})
    if w.is_zero or w == v:
        return HNType((v,), (slope(alpha, v),))
    q = v - w
    return HNType((q, w), (slope(alpha, q), slope(alpha, w)))


def framed_stable(x: Representation, framing_vertices, rtol: float | None = None) -> bool:
    """No nonzero subrepresentation supported away from ``framing_vertices``."""
    W = max_subrep_avoiding(x, framing_vertices, rtol)
    return all(b.shape[1] == 0 for b in W.values())


def is_alpha_stable(x: Representation, alpha: CentralElement | None = None,
                    rtol: float | None = None) -> bool:
    Q = x.quiver
    if Q.framing is None or x.dims[Q.framing] != 1:
        raise PreconditionFailed("stability test needs the framing dimension to be 1")
    return framed_stable(x, [Q.framing], rtol)


@dataclass
class HessianIndex:
    index: int
    nullity: int
    eigenvalues: np.ndarray
    hess_tol: float

    @property
    def eigen_margin(self) -> float:
        """Closest eigenvalue to the +-hess_tol boundaries, relative to hess_tol."""
        a = np.abs(np.abs(self.eigenvalues) - self.hess_tol)
        return float(np.min(a) / self.hess_tol) if a.size and self.hess_tol > 0 else np.inf

    def as_dict(self) -> dict:
        return {"index": self.index, "nullity": self.nullity, "hess_tol": self.hess_tol,
                "eigen_margin": self.eigen_margin}


def real_hessian(sys: FlowSystem, y: np.ndarray, h: float) -> np.ndarray:
    """Central differences of the analytic gradient in (Re, Im) coordinates."""
    n = y.size
    Hm = np.zeros((2 * n, 2 * n))
    e = np.zeros(n, dtype=complex)
    for j in range(2 * n):
        e[:] = 0
        e[j % n] = h if j < n else 1j * h
        d = (sys.grad(y + e) - sys.grad(y - e)) / (2 * h)
        Hm[:, j] = np.concatenate([d.real, d.imag])
    return (Hm + Hm.T) / 2


def hessian_index(x: Representation, alpha: CentralElement,
                  tol: Tolerances = DEFAULT) -> HessianIndex:
    sys = FlowSystem(x.quiver, x.dims, alpha)
    y = x.vector()
    _require_critical(sys, y, tol.grad_tol)
    if y.size == 0:
        return HessianIndex(0, 0, np.zeros(0), 0.0)
    w = np.linalg.eigvalsh(real_hessian(sys, y, tol.hess_h))
    htol = tol.hess_rel * float(np.max(np.abs(w)))
    return HessianIndex(int(np.sum(w < -htol)), int(np.sum(np.abs(w) <= htol)), w, htol)


def hn_label(t: HNType) -> str:
    return " | ".join(repr(b) for b in t.blocks)


def is_critical(x: Representation, alpha: CentralElement, tol: Tolerances = DEFAULT) -> bool:
    sys = FlowSystem(x.quiver, x.dims, alpha)
    return float(np.linalg.norm(sys.grad(x.vector()))) <= tol.grad_tol


__all__ = ["HNType", "CriticalClassification", "HessianIndex", "classify_critical",
           "hn_type_algebraic", "is_alpha_stable", "framed_stable", "max_subrep_avoiding",
           "hessian_index", "real_hessian", "is_critical", "hn_label"]
