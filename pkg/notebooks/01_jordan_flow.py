"""Walk through the downward flow on the Jordan quiver with one framing vertex.

Run with ``python3 notebooks/01_jordan_flow.py``.
"""
import numpy as np

from quiverflow import (Representation, canonical_central, classify_critical, energy, fixture,
                        hessian_index, hn_type_algebraic, integrate_flow)

Q, R = fixture("jordan")
alpha = canonical_central(Q, (1, 1))
print("central element on (1,1):", alpha.scalars)

# Start with a = abar = 1. This point is stable but not critical.
x0 = Representation(Q, (1, 1), {"a": [[1.0]], "abar": [[1.0]]})
print("f(x0) =", energy(x0, alpha))
print("algebraic HN type of x0:", hn_type_algebraic(x0, alpha).label)

res = integrate_flow(x0, alpha)
lim = res.limit
gap = abs(lim.blocks["abar"][0, 0]) ** 2 - abs(lim.blocks["a"][0, 0]) ** 2
print(f"status {res.status}, {res.accepted} steps, f_limit = {res.f_limit:.2e}")
print(f"|abar|^2 - |a|^2 at the limit = {gap:.8f}")
print(f"largest trace drift = {res.invariant_drift:.2e}")

# The zero representation is the other critical point on (1,1).
z = Representation.zero(Q, (1, 1))
print("zero point:", classify_critical(z, alpha).hn.label, "index", hessian_index(z, alpha).index)
print("limit:", classify_critical(lim, alpha).hn.label, "index", hessian_index(lim, alpha).index)

# A handful of random starts on (2,1): compare flow limits with the algebraic type.
a21 = canonical_central(Q, (2, 1))
rng = np.random.default_rng(0)
for t in range(5):
    x = Representation.random(Q, (2, 1), rng)
    if t % 2:
        x = Representation(Q, x.dims, {**x.blocks, "abar": np.zeros((1, 2))})
    r = integrate_flow(x, a21)
    print(t, r.status, hn_type_algebraic(x, a21).label, classify_critical(r.limit, a21).hn.label)
