"""Adjacent pairs on the Jordan quiver: bundle ranks, Hecke ranks and the ledger.

Run with ``python3 notebooks/02_adjacent_ledger.py``.
"""
import numpy as np

from quiverflow import (AdjacentPair, Representation, build_ledger, bundle_ranks, euler_data,
                        fixture, hecke_tangent_report)
from quiverflow.rep import GradedLinearMap
from quiverflow.slice_hecke import sample_flow_line_point
from quiverflow.suites import jordan_pair

Q, R = fixture("jordan")
rng = np.random.default_rng(1)

pair = AdjacentPair(Q, (1, 1), (0, 1), "1", Representation.zero(Q, (0, 1)))
L = build_ledger(pair, R, samples=5, seed=0)
print("ledger for (1,1) over (0,1):", L.summary())
print("total shift:", L.total_shift, "json bytes:", len(L.to_json()))

for v, v_u in [((2, 1), (0, 1)), ((2, 1), (1, 1)), ((3, 1), (2, 1))]:
    p = jordan_pair(v, v_u, rng)
    br = bundle_ranks(p, sample_flow_line_point(p, rng))
    e = euler_data(p)
    print(f"v={v} v_u={v_u}: D={br.rank_D} V={br.rank_V} T={br.rank_T} "
          f"lambda={br.lambda_u} euler_degree={e.degree}")

# Hecke ranks at a minimiser x_u on (1,1) with a random y.
p = jordan_pair((2, 1), (1, 1), rng)
y = GradedLinearMap.random(Q, p.e_k, p.v_u, rng)
rep = hecke_tangent_report(p, R, y)
print("Hecke ranks:", rep.ranks)
print("normal angle:", rep.angle)
