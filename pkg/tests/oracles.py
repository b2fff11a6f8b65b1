"""Independent reference constructions used to freeze expected values.

These rebuild the rectangular action and the relation derivative directly from
Kronecker products, without going through the package's block assembly.
"""
import numpy as np


def _kron_rows(Q, x1, x2):
    v1, v2 = x1.dims, x2.dims
    hom0 = [(k, v1[k] * v2[k]) for k in Q.vertices]
    hom1 = [(e, v1[e.head] * v2[e.tail]) for e in Q.edges]
    return v1, v2, hom0, hom1


def _offsets(items):
    out, o = {}, 0
    for key, n in items:
        out[key] = (o, n)
        o += n
    return out, o


def rho_oracle(Q, x1, x2):
    """(rho u)_a = u_h (x2)_a - (x1)_a u_t in row-major vec coordinates."""
    v1, v2, hom0, hom1 = _kron_rows(Q, x1, x2)
    c, nc = _offsets(hom0)
    r, nr = _offsets([(e.id, n) for e, n in hom1])
    M = np.zeros((nr, nc), dtype=complex)
    for e in Q.edges:
        ro, rn = r[e.id]
        if rn == 0:
            continue
        ho, hn = c[e.head]
        to, tn = c[e.tail]
        if hn:
            M[ro:ro + rn, ho:ho + hn] += np.kron(np.eye(v1[e.head]), x2.blocks[e.id].T)
        if tn:
            M[ro:ro + rn, to:to + tn] -= np.kron(x1.blocks[e.id], np.eye(v2[e.tail]))
    return M


def dnu_oracle(Q, R, x1, x2):
    """Derivative of quadratic relations: c (x1_{a2} dx_{a1} + dx_{a2} x2_{a1})."""
    v1, v2 = x1.dims, x2.dims
    c, nc = _offsets([(e.id, v1[e.head] * v2[e.tail]) for e in Q.edges])
    r, nr = _offsets([(rel.id, v1[rel.head] * v2[rel.tail]) for rel in R])
    M = np.zeros((nr, nc), dtype=complex)
    for rel in R:
        ro, rn = r[rel.id]
        if rn == 0:
            continue
        for coeff, p in rel.terms:
            a1, a2 = p.edges
            e1, e2 = Q.edge(a1), Q.edge(a2)
            o1, n1 = c[a1]
            o2, n2 = c[a2]
            if n1:
                M[ro:ro + rn, o1:o1 + n1] += coeff * np.kron(x1.blocks[a2], np.eye(v2[e1.tail]))
            if n2:
                M[ro:ro + rn, o2:o2 + n2] += coeff * np.kron(np.eye(v1[e2.head]), x2.blocks[a1].T)
    return M


def rank(M, rtol=1e-9):
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    return int(np.sum(s > rtol * max(s[0], 1.0)))


def complex_oracle(Q, R, x1, x2):
    P, D = rho_oracle(Q, x1, x2), dnu_oracle(Q, R, x1, x2)
    n0, n1, n2 = P.shape[1], P.shape[0], D.shape[0]
    h0 = n0 - rank(P)
    h2 = n2 - rank(D)
    h1 = n1 - rank(np.vstack([P.conj().T, D]))
    return h0, h1, h2
