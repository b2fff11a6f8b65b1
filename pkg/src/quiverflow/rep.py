"""Representations, graded maps and the linear algebra around them.

Conventions:
  * ``GradedLinearMap(Q, src=v2, tgt=v1)`` has a block of shape
    (v1[h(a)], v2[t(a)]) per edge, i.e. it lives in Hom^1(Q, v2, v1).
  * Hom^0(Q, v2, v1) elements are ``LieAlgebraElement`` with per-vertex blocks
    of shape (v1[k], v2[k]).
  * <A, B> = sum tr(A B^*) blockwise; the real metric is its real part.
"""
from __future__ import annotations

from typing import Callable, Iterable, Mapping

import numpy as np

from .errors import ShapeError, UnsupportedRelationDegree
from .quiver import DimensionVector, Path, Quiver, RelationSet


class BlockSpace:
    """A direct sum of complex matrix spaces with a fixed packing order."""

    def __init__(self, keys: Iterable[str], shapes: Iterable[tuple[int, int]]):
        self.keys = tuple(keys)
        self.shapes = tuple(tuple(s) for s in shapes)
        sizes = [r * c for r, c in self.shapes]
        self.offsets = tuple(np.cumsum([0] + sizes)[:-1].tolist())
        self.dim = int(sum(sizes))

    def pack(self, blocks: Mapping[str, np.ndarray]) -> np.ndarray:
        out = np.zeros(self.dim, dtype=complex)
        for k, (r, c), o in zip(self.keys, self.shapes, self.offsets):
            out[o:o + r * c] = np.asarray(blocks[k]).reshape(-1)
        return out

    def unpack(self, vec: np.ndarray) -> dict[str, np.ndarray]:
        return {k: np.array(vec[o:o + r * c], dtype=complex).reshape(r, c)
                for k, (r, c), o in zip(self.keys, self.shapes, self.offsets)}

    def zeros(self) -> dict[str, np.ndarray]:
        return {k: np.zeros(s, dtype=complex) for k, s in zip(self.keys, self.shapes)}

    def basis(self):
        for i in range(self.dim):
            e = np.zeros(self.dim, dtype=complex)
            e[i] = 1.0
            yield self.unpack(e)


def hom1_space(Q: Quiver, v2: DimensionVector, v1: DimensionVector) -> BlockSpace:
    return BlockSpace([e.id for e in Q.edges], [(v1[e.head], v2[e.tail]) for e in Q.edges])


def hom0_space(Q: Quiver, v2: DimensionVector, v1: DimensionVector) -> BlockSpace:
    return BlockSpace(Q.vertices, [(v1[k], v2[k]) for k in Q.vertices])


def rel_space(R: RelationSet, v2: DimensionVector, v1: DimensionVector) -> BlockSpace:
    return BlockSpace([r.id for r in R], [(v1[r.head], v2[r.tail]) for r in R])


def assemble(fn: Callable[[dict], dict], dom: BlockSpace, cod: BlockSpace) -> np.ndarray:
    """Matrix of a complex-linear map between block spaces."""
    M = np.zeros((cod.dim, dom.dim), dtype=complex)
    for i, b in enumerate(dom.basis()):
        M[:, i] = cod.pack(fn(b))
    return M


def random_blocks(space: BlockSpace, rng: np.random.Generator, scale: float = 1.0) -> dict:
    z = rng.standard_normal(space.dim) + 1j * rng.standard_normal(space.dim)
    return space.unpack(scale * z / np.sqrt(2))


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


def _inner(A: Mapping, B: Mapping) -> complex:
    return complex(sum(np.vdot(B[k], A[k]) for k in A))


class _Blocks:
    space: BlockSpace
    blocks: dict

    def vector(self) -> np.ndarray:
        return self.space.pack(self.blocks)

    def inner(self, other) -> complex:
        return _inner(self.blocks, other.blocks)

    def norm(self) -> float:
        return float(np.sqrt(sum(np.vdot(b, b).real for b in self.blocks.values())))

    def __getitem__(self, key) -> np.ndarray:
        return self.blocks[key]

    def _like(self, blocks):
        raise NotImplementedError

    def __add__(self, other):
        return self._like({k: self.blocks[k] + other.blocks[k] for k in self.blocks})

    def __sub__(self, other):
        return self._like({k: self.blocks[k] - other.blocks[k] for k in self.blocks})

    def __mul__(self, c):
        return self._like({k: c * b for k, b in self.blocks.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1


class GradedLinearMap(_Blocks):
    """An element of Hom^1(Q, src, tgt)."""

    def __init__(self, quiver: Quiver, src, tgt, blocks: Mapping[str, np.ndarray] | None = None):
        self.quiver = quiver
        self.src = quiver.dimvec(src)
        self.tgt = quiver.dimvec(tgt)
        self.space = hom1_space(quiver, self.src, self.tgt)
        given = dict(blocks or {})
        unknown = set(given) - set(self.space.keys)
        if unknown:
            raise ShapeError(f"unknown edges {sorted(unknown)}")
        out = {}
        for k, shape in zip(self.space.keys, self.space.shapes):
            b = np.zeros(shape, dtype=complex) if k not in given else np.asarray(given[k], dtype=complex)
            if b.ndim == 0:
                b = b.reshape(1, 1)
            if b.shape != shape:
                raise ShapeError(f"edge {k}: expected shape {shape}, got {b.shape}")
            out[k] = _frozen(b)
        self.blocks = out

    def _like(self, blocks):
        return GradedLinearMap(self.quiver, self.src, self.tgt, blocks)

    @classmethod
    def from_vector(cls, quiver, src, tgt, vec) -> "GradedLinearMap":
        src, tgt = quiver.dimvec(src), quiver.dimvec(tgt)
        return cls(quiver, src, tgt, hom1_space(quiver, src, tgt).unpack(vec))

    @classmethod
    def random(cls, quiver, src, tgt, rng, scale: float = 1.0) -> "GradedLinearMap":
        src, tgt = quiver.dimvec(src), quiver.dimvec(tgt)
        return cls(quiver, src, tgt, random_blocks(hom1_space(quiver, src, tgt), rng, scale))

    def __repr__(self):
        return f"GradedLinearMap({self.src}->{self.tgt})"


class Representation(GradedLinearMap):
    def __init__(self, quiver: Quiver, dims, blocks: Mapping[str, np.ndarray] | None = None):
        super().__init__(quiver, dims, dims, blocks)

    @property
    def dims(self) -> DimensionVector:
        return self.src

    def _like(self, blocks):
        return Representation(self.quiver, self.dims, blocks)

    @classmethod
    def zero(cls, quiver, dims) -> "Representation":
        return cls(quiver, dims)

    @classmethod
    def from_vector(cls, quiver, dims, vec) -> "Representation":
        dims = quiver.dimvec(dims)
        return cls(quiver, dims, hom1_space(quiver, dims, dims).unpack(vec))

    @classmethod
    def random(cls, quiver, dims, rng, scale: float = 1.0) -> "Representation":
        dims = quiver.dimvec(dims)
        return cls(quiver, dims, random_blocks(hom1_space(quiver, dims, dims), rng, scale))

    def as_map(self) -> GradedLinearMap:
        return GradedLinearMap(self.quiver, self.dims, self.dims, self.blocks)

    def __repr__(self):
        return f"Representation{self.dims}"


class LieAlgebraElement(_Blocks):
    """Per-vertex blocks; square for Lie(G_v), rectangular for Hom^0(Q, src, tgt)."""

    def __init__(self, quiver: Quiver, src, tgt, blocks: Mapping[str, np.ndarray] | None = None):
        self.quiver = quiver
        self.src = quiver.dimvec(src)
        self.tgt = quiver.dimvec(tgt)
        self.space = hom0_space(quiver, self.src, self.tgt)
        given = dict(blocks or {})
        out = {}
        for k, shape in zip(self.space.keys, self.space.shapes):
            b = np.zeros(shape, dtype=complex) if k not in given else np.asarray(given[k], dtype=complex)
            if b.ndim == 0:
                b = b.reshape(1, 1)
            if b.shape != shape:
                raise ShapeError(f"vertex {k}: expected shape {shape}, got {b.shape}")
            out[k] = _frozen(b)
        self.blocks = out

    def _like(self, blocks):
        return LieAlgebraElement(self.quiver, self.src, self.tgt, blocks)

    @classmethod
    def scalar(cls, quiver, dims, scalars: Mapping[str, complex]) -> "LieAlgebraElement":
        dims = quiver.dimvec(dims)
        return cls(quiver, dims, dims, {k: complex(scalars.get(k, 0)) * np.eye(dims[k])
                                        for k in quiver.vertices})

    @classmethod
    def random(cls, quiver, src, tgt, rng) -> "LieAlgebraElement":
        src, tgt = quiver.dimvec(src), quiver.dimvec(tgt)
        return cls(quiver, src, tgt, random_blocks(hom0_space(quiver, src, tgt), rng))

    def skew_defect(self) -> float:
        return max((float(np.max(np.abs(b + b.conj().T))) for b in self.blocks.values() if b.size),
                   default=0.0)

    def trace(self) -> complex:
        return complex(sum(np.trace(b) for b in self.blocks.values()))


class RelationValue(_Blocks):
    """An element of Rel(Q, src, tgt, R)."""

    def __init__(self, R: RelationSet, src: DimensionVector, tgt: DimensionVector,
                 blocks: Mapping[str, np.ndarray] | None = None):
        self.relations = R
        self.src, self.tgt = src, tgt
        self.space = rel_space(R, src, tgt)
        given = dict(blocks or {})
        out = {}
        for k, shape in zip(self.space.keys, self.space.shapes):
            b = np.zeros(shape, dtype=complex) if k not in given else np.asarray(given[k], dtype=complex)
            if b.shape != shape:
                raise ShapeError(f"relation {k}: expected shape {shape}, got {b.shape}")
            out[k] = _frozen(b)
        self.blocks = out

    def _like(self, blocks):
        return RelationValue(self.relations, self.src, self.tgt, blocks)


# --- paths and relations ---------------------------------------------------

def _as_path(Q: Quiver, p) -> Path:
    p = p if isinstance(p, Path) else Path(tuple(p))
    p.validate(Q)
    return p


def _product(x: GradedLinearMap, edges, n_src: int) -> np.ndarray:
    """x_{e_m} ... x_{e_1} for edges in application order; identity if empty."""
    out = np.eye(n_src, dtype=complex)
    for a in edges:
        out = x.blocks[a] @ out
    return out


def evaluate_path(x: Representation, p) -> np.ndarray:
    Q = x.quiver
    p = _as_path(Q, p)
    return _product(x, p.edges, x.dims[p.tail(Q)])


def relation_map(x: Representation, R: RelationSet) -> RelationValue:
    blocks = {}
    for r in R:
        acc = np.zeros((x.dims[r.head], x.dims[r.tail]), dtype=complex)
        for c, p in r.terms:
            acc += c * _product(x, p.edges, x.dims[r.tail])
        blocks[r.id] = acc
    return RelationValue(R, x.dims, x.dims, blocks)


def _check_pair(x1: Representation, x2: Representation, dx: GradedLinearMap):
    if dx.src != x2.dims or dx.tgt != x1.dims:
        raise ShapeError(f"dx lives in Hom^1({dx.src},{dx.tgt}) but x2, x1 have dims "
                         f"{x2.dims}, {x1.dims}")


def path_derivative(x1: Representation, x2: Representation, dx: GradedLinearMap, p) -> np.ndarray:
    """sum_l (x1)_{a_n}..(x1)_{a_{l+1}} dx_{a_l} (x2)_{a_{l-1}}..(x2)_{a_1}."""
    _check_pair(x1, x2, dx)
    Q = x1.quiver
    p = _as_path(Q, p)
    e = p.edges
    out = np.zeros((x1.dims[p.head(Q)], x2.dims[p.tail(Q)]), dtype=complex)
    right = np.eye(x2.dims[p.tail(Q)], dtype=complex)
    for l, a in enumerate(e):
        left = _product(x1, e[l + 1:], x1.dims[Q.edge(a).head])
        out += left @ dx.blocks[a] @ right
        right = x2.blocks[a] @ right
    return out


def d_nu(x1: Representation, x2: Representation, R: RelationSet, dx: GradedLinearMap) -> RelationValue:
    _check_pair(x1, x2, dx)
    blocks = {}
    for r in R:
        acc = np.zeros((x1.dims[r.head], x2.dims[r.tail]), dtype=complex)
        for c, p in r.terms:
            acc += c * path_derivative(x1, x2, dx, p)
        blocks[r.id] = acc
    return RelationValue(R, x2.dims, x1.dims, blocks)


def d_nu_adjoint(x1: Representation, x2: Representation, R: RelationSet,
                 u: RelationValue) -> GradedLinearMap:
    """Adjoint of d_nu for quadratic relations.

    A path a2 a1 contributes conj(l) (x1)_{a2}^* u_r at a1 and
    conj(l) u_r (x2)_{a1}^* at a2.
    """
    if not R.is_quadratic:
        raise UnsupportedRelationDegree("adjoint formula is implemented for quadratic relations")
    Q = x1.quiver
    out = hom1_space(Q, x2.dims, x1.dims).zeros()
    for r in R:
        ur = u.blocks[r.id]
        for c, p in r.terms:
            a1, a2 = p.edges
            out[a1] = out[a1] + np.conj(c) * x1.blocks[a2].conj().T @ ur
            out[a2] = out[a2] + np.conj(c) * ur @ x2.blocks[a1].conj().T
    return GradedLinearMap(Q, x2.dims, x1.dims, out)


# --- group and Lie algebra actions -----------------------------------------

def inf_action(x1: Representation, u: LieAlgebraElement, x2: Representation | None = None) -> GradedLinearMap:
    """(rho(u))_a = u_{h(a)} (x2)_a - (x1)_a u_{t(a)}; x2 defaults to x1."""
    x2 = x1 if x2 is None else x2
    if u.src != x2.dims or u.tgt != x1.dims:
        raise ShapeError("u must map the x2 spaces to the x1 spaces")
    Q = x1.quiver
    blocks = {e.id: u.blocks[e.head] @ x2.blocks[e.id] - x1.blocks[e.id] @ u.blocks[e.tail]
              for e in Q.edges}
    return GradedLinearMap(Q, x2.dims, x1.dims, blocks)


def inf_action_adjoint(x1: Representation, dx: GradedLinearMap,
                       x2: Representation | None = None) -> LieAlgebraElement:
    """(rho^*(dx))_k = sum_{h(a)=k} dx_a (x2)_a^* - sum_{t(a)=k} (x1)_a^* dx_a."""
    x2 = x1 if x2 is None else x2
    _check_pair(x1, x2, dx)
    Q = x1.quiver
    out = hom0_space(Q, x2.dims, x1.dims).zeros()
    for e in Q.edges:
        out[e.head] = out[e.head] + dx.blocks[e.id] @ x2.blocks[e.id].conj().T
        out[e.tail] = out[e.tail] - x1.blocks[e.id].conj().T @ dx.blocks[e.id]
    return LieAlgebraElement(Q, x2.dims, x1.dims, out)


def group_action(g: Mapping[str, np.ndarray], x: Representation) -> Representation:
    """g . x = g_h x g_t^{-1}."""
    Q = x.quiver
    inv = {k: np.linalg.inv(g[k]) if x.dims[k] else g[k] for k in Q.vertices}
    return Representation(Q, x.dims, {e.id: g[e.head] @ x.blocks[e.id] @ inv[e.tail] for e in Q.edges})


def moment_map(x: Representation) -> LieAlgebraElement:
    """mu_k = (1/2i)(sum_{h(a)=k} x_a x_a^* - sum_{t(a)=k} x_a^* x_a)."""
    Q = x.quiver
    M = {k: np.zeros((x.dims[k], x.dims[k]), dtype=complex) for k in Q.vertices}
    for e in Q.edges:
        b = x.blocks[e.id]
        M[e.head] = M[e.head] + b @ b.conj().T
        M[e.tail] = M[e.tail] - b.conj().T @ b
    return LieAlgebraElement(Q, x.dims, x.dims, {k: m / 2j for k, m in M.items()})


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


# --- block assembly ---------------------------------------------------------

def block_sum(x1: Representation, x2: Representation, dx: GradedLinearMap | None = None) -> Representation:
    """[[x1, dx], [0, x2]] on V1 + V2, with V1 first at every vertex."""
    Q = x1.quiver
    v = x1.dims + x2.dims
    blocks = {}
    for e in Q.edges:
        h1, t1 = x1.dims[e.head], x1.dims[e.tail]
        b = np.zeros((v[e.head], v[e.tail]), dtype=complex)
        b[:h1, :t1] = x1.blocks[e.id]
        b[h1:, t1:] = x2.blocks[e.id]
        if dx is not None:
            b[:h1, t1:] = dx.blocks[e.id]
        blocks[e.id] = b
    return Representation(Q, v, blocks)


def relation_blocks(val: RelationValue, v1: DimensionVector, v2: DimensionVector) -> dict[str, dict]:
    """Split a relation value on V1 + V2 into its four corner blocks."""
    out = {"11": {}, "12": {}, "21": {}, "22": {}}
    R = val.relations
    for r in R:
        b = val.blocks[r.id]
        h1, t1 = v1[r.head], v1[r.tail]
        out["11"][r.id] = b[:h1, :t1]
        out["12"][r.id] = b[:h1, t1:]
        out["21"][r.id] = b[h1:, :t1]
        out["22"][r.id] = b[h1:, t1:]
    return out
