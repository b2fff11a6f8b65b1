"""Central elements, slopes and induced stability parameters.

All arithmetic here is exact (``fractions.Fraction``); floats never enter a
slope comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import InvalidDimensionVector, InvalidFraming, ZeroDimensionVector
from .quiver import DimensionVector, Quiver


@dataclass(frozen=True)
class CentralElement:
    """Scalars alpha_k; the Lie algebra element is i*alpha_k*id at vertex k."""

    vertices: tuple[str, ...]
    scalars: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "scalars", tuple(Fraction(s) for s in self.scalars))

    @classmethod
    def of(cls, Q: Quiver, alpha) -> "CentralElement":
        if isinstance(alpha, CentralElement):
            return alpha
        if isinstance(alpha, Mapping):
            return cls(Q.vertices, tuple(Fraction(alpha.get(k, 0)) for k in Q.vertices))
        return cls(Q.vertices, tuple(Fraction(a) for a in alpha))

    def __getitem__(self, k: str) -> Fraction:
        return self.scalars[self.vertices.index(k)]

    def degree(self, v: DimensionVector) -> Fraction:
        if v.vertices != self.vertices:
            raise InvalidDimensionVector("central element and dimension vector disagree")
        return sum((a * d for a, d in zip(self.scalars, v.values)), Fraction(0))

    def is_admissible(self, v: DimensionVector) -> bool:
        return self.degree(v) == 0

    def as_floats(self) -> dict[str, float]:
        return {k: float(a) for k, a in zip(self.vertices, self.scalars)}

    def as_dict(self) -> dict[str, str]:
        return {k: str(a) for k, a in zip(self.vertices, self.scalars)}

    def restricted(self, v: DimensionVector) -> dict[str, Fraction]:
        """Scalars on the support of v."""
        return {k: a for k, a, d in zip(self.vertices, self.scalars, v.values) if d > 0}


@dataclass(frozen=True)
class SlopeData:
    degree: Fraction
    rank: int
    slope: Fraction
    admissible: bool


def slope_data(alpha: CentralElement, v: DimensionVector) -> SlopeData:
    if v.is_zero:
        raise ZeroDimensionVector("slope of the zero dimension vector is undefined")
    deg = alpha.degree(v)
    return SlopeData(deg, v.total, deg / v.total, deg == 0)


def slope(alpha: CentralElement, v: DimensionVector) -> Fraction:
    return slope_data(alpha, v).slope


def canonical_central(Q: Quiver, v) -> CentralElement:
    v = Q.dimvec(v)
    if Q.framing is None:
        raise InvalidFraming("quiver has no framing vertex")
    if v[Q.framing] != 1:
        raise InvalidFraming(f"canonical element needs v[{Q.framing}] = 1, got {v[Q.framing]}")
    rest = sum(v[k] for k in Q.nonframing)
    return CentralElement(Q.vertices, tuple(
        Fraction(-rest) if k == Q.framing else Fraction(1) for k in Q.vertices))


def induced_central(alpha: CentralElement, v: DimensionVector,
                    vp: DimensionVector) -> CentralElement:
    """alpha'_k = alpha_k - slope_alpha(vp) at every vertex."""
    if vp.is_zero:
        raise ZeroDimensionVector("induced element needs a nonzero sub-vector")
    if not vp.leq(v):
        raise InvalidDimensionVector(f"{vp} is not bounded by {v}")
    s = slope(alpha, vp)
    return CentralElement(alpha.vertices, tuple(a - s for a in alpha.scalars))
