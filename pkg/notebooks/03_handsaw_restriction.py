"""Split the ADHM quiver into the handsaw quiver and follow the relation.

Run with ``python3 notebooks/03_handsaw_restriction.py``.
"""
import numpy as np

from quiverflow import (Representation, adhm_to_handsaw_spec, build_negative_slice_quiver,
                        embed_restricted_rep, expand_restrict, fixture, relation_map)

Qa, Ra = fixture("adhm")
spec = adhm_to_handsaw_spec(Qa, Ra, (1, 1), (1, 1, 1))
res = expand_restrict(spec)
print("handsaw vertices:", res.Qprime.vertices)
print("retained edges:", [e.id for e in res.Qprime.edges])
print("retained relations:", [r.id for r in res.Rprime])
print("fully restricted:", res.fully_restricted)
print("dropped lifts:", len(res.dropped_paths))

# The relation on the restricted quiver is the matching block of the base relation.
xp = Representation.random(res.Qprime, spec.part_dims, np.random.default_rng(2))
base = relation_map(embed_restricted_rep(spec, xp), Ra)
print("base relation block:\n", np.round(base.blocks["r"], 6))
print("restricted relation:", np.round(relation_map(xp, res.Rprime).blocks["r[V1>V2]"], 6))

Qj, Rj = fixture("jordan")
ns = expand_restrict(build_negative_slice_quiver(Qj, Rj, (1, 1), (1, 0)))
print("negative slice quiver edges:", [e.id for e in ns.Qprime.edges])
print("fully restricted:", ns.fully_restricted)
