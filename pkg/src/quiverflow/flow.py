"""Downward gradient flow of f(x) = |mu(x) - alpha|^2.

With M_k = sum_{h(a)=k} x_a x_a^* - sum_{t(a)=k} x_a^* x_a we have
mu = M / 2i and f = sum_k |H_k|^2 where H_k = M_k / 2 + alpha_k. The gradient
for the real metric Re<.,.> is grad_a = 2 (H_{h(a)} x_a - x_a H_{t(a)}).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .config import DEFAULT, Tolerances, rng_for
from .errors import InadmissibleCentral
from .quiver import Quiver
from .rep import GradedLinearMap, Representation, hom1_space
from .stability import CentralElement

CONVERGED = "Converged"
MAX_STEPS = "MaxSteps"
DIVERGED = "Diverged"
STALLED = "NumericalStall"


class FlowSystem:
    """Packed-vector evaluation of H, f and grad f for one (quiver, dims, alpha).

    Every block is zero-padded to n x n (n the largest vertex dimension) so a
    whole evaluation is a handful of batched array operations.
    """

    def __init__(self, Q: Quiver, dims, alpha: CentralElement):
        self.quiver = Q
        self.dims = Q.dimvec(dims)
        if not alpha.is_admissible(self.dims):
            raise InadmissibleCentral(f"alpha is not admissible for {self.dims}")
        self.alpha = alpha
        self.space = hom1_space(Q, self.dims, self.dims)
        vidx = {k: i for i, k in enumerate(Q.vertices)}
        n = max(max(self.dims.values, default=1), 1)
        E, V = len(Q.edges), len(Q.vertices)
        self.n, self.E = n, E
        self.head = np.array([vidx[e.head] for e in Q.edges], dtype=int)
        self.tail = np.array([vidx[e.tail] for e in Q.edges], dtype=int)
        inc_h = np.zeros((V, E))
        inc_t = np.zeros((V, E))
        inc_h[self.head, np.arange(E)] = 1.0
        inc_t[self.tail, np.arange(E)] = 1.0
        self.inc_h, self.inc_t = inc_h, inc_t
        A = np.zeros((V, n, n), dtype=complex)
        for k in Q.vertices:
            d = self.dims[k]
            A[vidx[k], :d, :d] = float(alpha[k]) * np.eye(d)
        self.A = A
        idx = []
        for ei, ((r, c), o) in enumerate(zip(self.space.shapes, self.space.offsets)):
            rows, cols = np.divmod(np.arange(r * c), c) if c else (np.zeros(0, int), np.zeros(0, int))
            idx.append(ei * n * n + rows * n + cols)
        self.idx = np.concatenate(idx) if idx else np.zeros(0, int)

    def _pad(self, y: np.ndarray) -> np.ndarray:
        X = np.zeros(self.E * self.n * self.n, dtype=complex)
        X[self.idx] = y
        return X.reshape(self.E, self.n, self.n)

    def _H(self, X: np.ndarray) -> np.ndarray:
        Xh = np.conj(np.swapaxes(X, 1, 2))
        out_ = (X @ Xh).reshape(self.E, -1)
        in_ = (Xh @ X).reshape(self.E, -1)
        V = self.A.shape[0]
        M = (self.inc_h @ out_ - self.inc_t @ in_).reshape(V, self.n, self.n)
        return self.A + 0.5 * M

    def H(self, y: np.ndarray) -> list[np.ndarray]:
        Hp = self._H(self._pad(y))
        return [Hp[i, :d, :d] for i, d in enumerate(self.dims.values)]

    def energy(self, y: np.ndarray) -> float:
        Hp = self._H(self._pad(y))
        return float(np.vdot(Hp, Hp).real)

    def energy_grad(self, y: np.ndarray) -> tuple[float, np.ndarray]:
        X = self._pad(y)
        Hp = self._H(X)
        G = 2.0 * (Hp[self.head] @ X - X @ Hp[self.tail])
        return float(np.vdot(Hp, Hp).real), G.reshape(-1)[self.idx]

    def grad(self, y: np.ndarray) -> np.ndarray:
        return self.energy_grad(y)[1]


def energy(x: Representation, alpha: CentralElement) -> float:
    return FlowSystem(x.quiver, x.dims, alpha).energy(x.vector())


def grad_energy(x: Representation, alpha: CentralElement) -> GradedLinearMap:
    sys = FlowSystem(x.quiver, x.dims, alpha)
    return GradedLinearMap.from_vector(x.quiver, x.dims, x.dims, sys.grad(x.vector()))


@lru_cache(maxsize=1)
def descent_sign_certified() -> bool:
    """Startup oracle: f must decrease along -grad on a random state."""
    from .builders import jordan_double
    from .stability import canonical_central

    Q, _ = jordan_double()
    v = Q.dimvec((2, 1))
    sys = FlowSystem(Q, v, canonical_central(Q, v))
    y = Representation.random(Q, v, rng_for(0, "sign-oracle")).vector()
    f0, g = sys.energy_grad(y)
    f1 = sys.energy(y - 1e-6 * g)
    if not f1 < f0:
        raise AssertionError("implemented gradient is not a descent direction")
    return True


@dataclass
class FlowResult:
    times: np.ndarray
    f_values: np.ndarray
    grad_norms: np.ndarray
    limit: Representation
    status: str
    accepted: int
    rejected: int
    invariant_drift: float
    max_increase: float
    traces_start: dict = field(default_factory=dict, repr=False)
    traces_end: dict = field(default_factory=dict, repr=False)

    @property
    def f_limit(self) -> float:
        return float(self.f_values[-1])

    @property
    def grad_limit(self) -> float:
        return float(self.grad_norms[-1])

    def csv(self) -> str:
        lines = ["t,f,grad_norm"]
        lines += [f"{t:.17g},{f:.17g},{g:.17g}"
                  for t, f, g in zip(self.times, self.f_values, self.grad_norms)]
        return "\n".join(lines) + "\n"

    def summary(self) -> dict:
        return {"status": self.status, "f_limit": self.f_limit, "grad_norm": self.grad_limit,
                "accepted_steps": self.accepted, "rejected_steps": self.rejected,
                "t_final": float(self.times[-1]), "invariant_drift": self.invariant_drift,
                "max_increase": self.max_increase}


# Runge-Kutta-Fehlberg 4(5): the fourth-order solution is propagated and the
# fifth-order one only estimates the local error.
_C = np.array([0, 1 / 4, 3 / 8, 12 / 13, 1, 1 / 2])
_A = [
    [],
    [1 / 4],
    [3 / 32, 9 / 32],
    [1932 / 2197, -7200 / 2197, 7296 / 2197],
    [439 / 216, -8, 3680 / 513, -845 / 4104],
    [-8 / 27, 2, -3544 / 2565, 1859 / 4104, -11 / 40],
]
_B4 = np.array([25 / 216, 0, 1408 / 2565, 2197 / 4104, -1 / 5, 0])
_B5 = np.array([16 / 135, 0, 6656 / 12825, 28561 / 56430, -9 / 50, 2 / 55])


_A_ROWS = [np.array(row) for row in _A]


def _rkf45(rhs, y, k1, h):
    K = np.empty((6, y.size), dtype=complex)
    K[0] = k1
    for i in range(1, 6):
        K[i] = rhs(y + h * (_A_ROWS[i] @ K[:i]))
    y4 = y + h * (_B4 @ K)
    y5 = y + h * (_B5 @ K)
    return y4, float(np.linalg.norm(y5 - y4))


def integrate_flow(x0: Representation, alpha: CentralElement,
                   tol: Tolerances = DEFAULT, trace_len: int | None = None) -> FlowResult:
    """Integrate dx/dt = -grad f until |grad f| <= grad_tol.

    A step is accepted only if f does not increase (up to rounding) and the
    embedded error estimate is below step_tol * (1 + |x|).
    """
    descent_sign_certified()
    sys = FlowSystem(x0.quiver, x0.dims, alpha)
    L = tol.trace_len if trace_len is None else trace_len
    y = x0.vector().copy()
    f, g = sys.energy_grad(y)
    gn = float(np.linalg.norm(g))
    ts, fs, gs = [0.0], [f], [gn]
    t, h = 0.0, tol.h0
    acc = rej = 0
    max_inc = 0.0
    status = MAX_STEPS
    rhs = lambda z: -sys.grad(z)
    while True:
        if gn <= tol.grad_tol:
            status = CONVERGED
            break
        if not np.isfinite(f) or not np.all(np.isfinite(y)):
            status = DIVERGED
            break
        if acc + rej >= tol.max_steps:
            status = MAX_STEPS
            break
        if h < 1e-14 * max(1.0, t):
            status = STALLED
            break
        ynew, err = _rkf45(rhs, y, -g, h)
        fnew, gnew = sys.energy_grad(ynew)
        slack = 8 * np.finfo(float).eps * (1.0 + abs(f))
        if fnew <= f + slack and err <= tol.step_tol * (1.0 + np.linalg.norm(y)):
            max_inc = max(max_inc, fnew - f)
            t += h
            y, f, g = ynew, fnew, gnew
            gn = float(np.linalg.norm(g))
            ts.append(t)
            fs.append(f)
            gs.append(gn)
            acc += 1
            h *= tol.grow
        else:
            rej += 1
            h *= tol.shrink
    limit = Representation.from_vector(x0.quiver, x0.dims, y)
    tr0 = closed_path_traces(x0, L)
    tr1 = closed_path_traces(limit, L)
    drift = max((abs(tr1[k] - tr0[k]) for k in tr0), default=0.0)
    return FlowResult(np.array(ts), np.array(fs), np.array(gs), limit, status, acc, rej,
                      float(drift), float(max_inc), tr0, tr1)


def closed_cycles(Q: Quiver, L: int) -> list[tuple[str, ...]]:
    """Closed paths of length <= L, one representative per cyclic rotation."""
    seen = set()
    out = []

    def extend(start, path, at):
        if path and at == start:
            rots = [path[i:] + path[:i] for i in range(len(path))]
            # only rotations that are themselves closed paths from their start
            canon = min(rots)
            if canon not in seen:
                seen.add(canon)
                out.append(canon)
        if len(path) == L:
            return
        for e in Q.out_edges(at):
            extend(start, path + (e.id,), e.head)

    for k in Q.vertices:
        extend(k, (), k)
    return sorted(out, key=lambda p: (len(p), p))


def closed_path_traces(x: Representation, L: int) -> dict[str, complex]:
    if L < 1:
        raise ValueError("L must be at least 1")
    out = {}
    for cyc in closed_cycles(x.quiver, L):
        start = x.quiver.edge(cyc[0]).tail
        m = np.eye(x.dims[start], dtype=complex)
        for a in cyc:
            m = x.blocks[a] @ m
        out[" ".join(reversed(cyc))] = complex(np.trace(m))
    return out
