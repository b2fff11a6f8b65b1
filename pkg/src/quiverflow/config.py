"""Central tolerance record and the seeded random number streams."""
from __future__ import annotations

import dataclasses
import zlib
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Tolerances:
    # linear algebra
    rank_rtol: float = 1e-9
    sample_margin: float = 1e3
    adjoint_tol: float = 1e-9
    linearize_tol: float = 1e-12
    skew_tol: float = 1e-12
    angle_tol: float = 1e-8
    fd_rank_rtol: float = 1e-6
    max_dim: int = 8
    # flow
    grad_tol: float = 1e-8
    max_steps: int = 100_000
    h0: float = 1e-2
    shrink: float = 0.5
    grow: float = 1.2
    step_tol: float = 1e-10
    trace_len: int = 4
    trace_drift: float = 1e-6
    # critical points
    hess_h: float = 1e-5
    hess_rel: float = 1e-4
    class_rel: float = 1e-6
    class_margin: float = 10.0
    # membership tests on sampled points
    member_tol: float = 1e-9

    def replace(self, **kw) -> "Tolerances":
        return dataclasses.replace(self, **kw)

    def with_overrides(self, overrides: dict[str, str | float]) -> "Tolerances":
        fields = {f.name: f.type for f in dataclasses.fields(self)}
        kw = {}
        for k, val in overrides.items():
            if k not in fields:
                raise KeyError(f"unknown tolerance {k!r}")
            kw[k] = int(float(val)) if fields[k] in (int, "int") else float(val)
        return self.replace(**kw)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


DEFAULT = Tolerances()


def rng_for(seed: int, suite: str = "", trial: int = 0) -> np.random.Generator:
    """Counter-based stream keyed by (seed, suite, trial)."""
    ss = np.random.SeedSequence([int(seed) & (2**64 - 1), zlib.crc32(suite.encode()), int(trial)])
    return np.random.Generator(np.random.Philox(ss))
