"""Dense numerical rank, null spaces and subspace comparison with margins."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import subspace_angles, svd

from .config import DEFAULT


@dataclass(frozen=True)
class RankInfo:
    rank: int
    sigma_max: float
    smallest_kept: float
    largest_dropped: float
    rtol: float
    scale: float = 0.0

    @property
    def margin(self) -> float:
        """Distance of the spectrum from the cut-off, in multiples of it.

        Both the smallest retained and the largest discarded singular value
        must be this many times away from ``rtol * sigma_max``. When a problem
        scale is supplied the reference is ``rtol * max(sigma_max, scale)``, so
        a matrix whose entries are all rounding noise reports a small margin.
        """
        cut = self.rtol * max(self.sigma_max, self.scale, 1e-300)
        lo = np.inf if self.rank == 0 else self.smallest_kept / cut
        hi = np.inf if self.largest_dropped <= 0 else cut / self.largest_dropped
        return float(min(lo, hi))

    def as_dict(self) -> dict:
        return {"rank": self.rank, "sigma_max": self.sigma_max,
                "smallest_kept": self.smallest_kept,
                "largest_dropped": self.largest_dropped, "margin": self.margin}


def _rank_from_sv(s: np.ndarray, rtol: float, scale: float = 0.0) -> RankInfo:
    smax = float(s[0]) if s.size else 0.0
    cut = rtol * max(smax, 1e-300)
    r = int(np.sum(s > cut))
    kept = float(s[r - 1]) if r > 0 else 0.0
    dropped = float(s[r]) if r < s.size else 0.0
    return RankInfo(r, smax, kept, dropped, rtol, scale)


def numerical_rank(M: np.ndarray, rtol: float | None = None, scale: float = 0.0) -> RankInfo:
    rtol = DEFAULT.rank_rtol if rtol is None else rtol
    if M.size == 0:
        return RankInfo(0, 0.0, 0.0, 0.0, rtol, scale)
    s = svd(M, compute_uv=False, lapack_driver="gesvd")
    return _rank_from_sv(s, rtol, scale)


def null_space(M: np.ndarray, rtol: float | None = None,
               scale: float = 0.0) -> tuple[np.ndarray, RankInfo]:
    """Orthonormal basis (columns) of ker M under the module-wide rank rule."""
    rtol = DEFAULT.rank_rtol if rtol is None else rtol
    n = M.shape[1]
    if M.shape[0] == 0 or n == 0:
        return np.eye(n, dtype=complex), RankInfo(0, 0.0, 0.0, 0.0, rtol, scale)
    u, s, vh = svd(M, full_matrices=True, lapack_driver="gesvd")
    info = _rank_from_sv(s, rtol, scale)
    return vh[info.rank:].conj().T, info


def range_basis(M: np.ndarray, rtol: float | None = None) -> tuple[np.ndarray, RankInfo]:
    """Orthonormal basis (columns) of im M."""
    rtol = DEFAULT.rank_rtol if rtol is None else rtol
    if M.size == 0:
        return np.zeros((M.shape[0], 0), dtype=complex), RankInfo(0, 0.0, 0.0, 0.0, rtol)
    u, s, vh = svd(M, full_matrices=False, lapack_driver="gesvd")
    info = _rank_from_sv(s, rtol)
    return u[:, :info.rank], info


def max_principal_angle(A: np.ndarray, B: np.ndarray) -> float:
    """Largest principal angle between column spans; inf if dimensions differ."""
    if A.shape[1] != B.shape[1]:
        return float("inf")
    if A.shape[1] == 0:
        return 0.0
    return float(np.max(subspace_angles(A, B)))


def realify(M: np.ndarray) -> np.ndarray:
    """Real matrix of a complex-linear map in (Re, Im) coordinates."""
    return np.block([[M.real, -M.imag], [M.imag, M.real]])
