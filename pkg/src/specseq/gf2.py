"""Tiny GF(2) linear algebra on bit-tuple vectors."""

from __future__ import annotations


def nullspace(columns, dim):
    """Basis of {c : sum c_i columns_i = 0} over F2.

    `columns` is a list of bit-tuples of length `dim`; returns a list of
    bit-tuples of length len(columns).
    """
    k = len(columns)
    # build rows of the dim x k matrix
    rows = [[columns[j][i] & 1 for j in range(k)] for i in range(dim)]
    # Gauss elimination, tracking pivot columns
    pivots = []
    r = 0
    for c in range(k):
        sel = None
        for i in range(r, dim):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(dim):
            if i != r and rows[i][c]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * k
        v[fc] = 1
        for pi, pc in enumerate(pivots):
            if rows[pi][fc]:
                v[pc] = 1
        basis.append(tuple(v))
    return basis


def kernel_of_map(fn, ring_dim, basis_elements):
    """Kernel basis of an F2-additive map given by images of basis elements.

    `fn(e)` must return a bit-tuple of length ring_dim; returns kernel
    elements as F2-combinations (bit tuples over the basis).
    """
    cols = [tuple(fn(e)) for e in basis_elements]
    return nullspace(cols, ring_dim)
